"""The five integral-form families attached to a parameter on s1+s2+s3 = 0.

kaplansky: realization of the generic 9|8-dimensional algebra from closed
    formulas (three sl2 blocks acting on a sign-indexed odd cube), used as the
    independent oracle for the transcribed family tables.
families: the five structure tables (G, GP, GPP, GHAT, GHATP) and the odd
    contraction relating hatted to unhatted families.
isos: permutation/scaling isomorphisms and base-change maps between families.
kac: contragredient-presentation checks (Cartan-matrix relations, derived
    root vectors, the quartic Serre-type bracket).
"""

from .families import FAMILY_KEYS, contract, family_build, tau_of
from .isos import ALL_PERMS, basis_change, s3_scale_iso, sigma_image
from .kac import KacReport, kac_relation_report
from .kaplansky import FAMILY_TO_KAPLANSKY_NAMES, kaplansky_build

__all__ = [
    "ALL_PERMS",
    "FAMILY_KEYS",
    "FAMILY_TO_KAPLANSKY_NAMES",
    "KacReport",
    "basis_change",
    "contract",
    "family_build",
    "kac_relation_report",
    "kaplansky_build",
    "s3_scale_iso",
    "sigma_image",
    "tau_of",
]
