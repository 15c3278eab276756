"""
Verification of homomorphisms from surface groups into B²_{n,n}.
"""

import logging

from braidkit.braids.models import BraidWord
from braidkit.braids.words import compose, inverse, is_pure
from braidkit.garside.normal_form import is_trivial
from braidkit.mixed.models import MixedContext
from braidkit.mixed.subgroups import in_bnn2, pi_sign
from braidkit.surfaces.exceptions import ImageNotInB2nnError
from braidkit.surfaces.models import GroupHom, GroupWord, HomReport
from braidkit.surfaces.presentations import schreier_kernel_generators

logger: logging.Logger = logging.getLogger(__name__)


def evaluate(h: GroupHom, word: GroupWord) -> BraidWord:
    """Image of a word in the generators, freely reduced."""
    result = BraidWord.identity(2 * h.n)
    for g, e in word:
        image = h.images[g]
        result = compose(result, image if e > 0 else inverse(image))
    return result


def verify_hom(h: GroupHom, transversal: str | None = None) -> HomReport:
    """
    Check a candidate lift ``h`` of θ.

    Reports whether the relator maps to the trivial braid, whether ``pi_sign`` agrees
    with θ on every generator, and whether every Schreier generator of ker θ maps to a
    pure braid.

    Raises:
        ImageNotInB2nnError: If some generator image is outside B²_{n,n}.
        ThetaNotSurjectiveError: If θ of the source is not surjective.
    """
    ctx = MixedContext(n=h.n)
    p = h.source
    for g in p.generators:
        if not in_bnn2(h.images[g], ctx):
            raise ImageNotInB2nnError(g, h.n)

    relator_image = evaluate(h, p.relator)
    well_defined = is_trivial(relator_image)
    commutes = all(pi_sign(h.images[g], ctx) == p.theta[g] for g in p.generators)
    kernel = schreier_kernel_generators(p, transversal)
    kernel_in_pure = all(is_pure(evaluate(h, word)) for word in kernel)

    report = HomReport(
        well_defined=well_defined,
        commutes=commutes,
        kernel_in_pure=kernel_in_pure,
        relator_image_length=len(relator_image),
        kernel_generators=len(kernel),
    )
    logger.debug(
        "Homomorphism verified",
        extra={
            "kind": p.kind.value,
            "m": p.m,
            "n": h.n,
            "well_defined": well_defined,
            "commutes": commutes,
            "kernel_in_pure": kernel_in_pure,
        },
    )
    return report
