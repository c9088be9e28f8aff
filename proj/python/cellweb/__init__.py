"""Exact computations with standard Young tableaux, Kazhdan-Lusztig cells,
and sl3 webs.

Objects cross the boundary as text: permutations in one-line notation
("54312"), tableaux as slash-separated rows ("1,3,5/2,4,7/6,8,9"), webs in
the versioned "web 1" format produced by :func:`tableau_to_web`.
"""

from cellweb._core import (
    KLTable,
    apply_generator,
    f_web,
    f_yt,
    known_checks,
    match_perms_tableaux,
    match_webs_tableaux,
    perm_tau,
    rs,
    rs_inverse,
    standard_tableaux,
    tableau_tau,
    tableau_to_web,
    verify,
    web_tau,
    web_to_tableau,
    web_yamanouchi,
)
from cellweb._core import hook_length_count as _hook_length_count

__all__ = [
    "KLTable",
    "apply_generator",
    "f_web",
    "f_yt",
    "hook_length_count",
    "known_checks",
    "match_perms_tableaux",
    "match_webs_tableaux",
    "perm_tau",
    "rs",
    "rs_inverse",
    "standard_tableaux",
    "tableau_tau",
    "tableau_to_web",
    "verify",
    "web_tau",
    "web_to_tableau",
    "web_yamanouchi",
]


def hook_length_count(shape):
    """Number of standard tableaux of the given shape, as a Python int."""
    return int(_hook_length_count(list(shape)))
