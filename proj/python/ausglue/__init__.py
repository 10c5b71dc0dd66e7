"""Glued higher Auslander algebras: AR quivers, verification reports and
connecting angles.

Sources are named by a kind and an argument: ("dynkin", "D4"),
("nakayama", "4,3"), ("auslander", "A3") or ("quiver", path to a spec file).
The field is "q" for the rationals or a prime; empty means AUSGLUE_FIELD or
F_32003.
"""

import json

from . import _ausglue
from ._ausglue import AusglueError

__all__ = ["AusglueError", "ar_quiver", "ar_dot", "glued_quiver", "verify", "angles"]


def ar_quiver(dynkin, orientation="linear", field=""):
    return json.loads(_ausglue.ar_quiver(dynkin, orientation, field))


def ar_dot(dynkin, orientation="linear"):
    return _ausglue.ar_dot(dynkin, orientation)


def glued_quiver(kind, arg, orientation="linear", n=1, k=1, field=""):
    return json.loads(_ausglue.glued_quiver(kind, arg, orientation, n, k, field))


def verify(kind, arg, orientation="linear", n=1, k=1, field=""):
    return json.loads(_ausglue.verify(kind, arg, orientation, n, k, field))


def angles(kind, arg, orientation="linear", n=2, field=""):
    return json.loads(_ausglue.angles(kind, arg, orientation, n, field))
