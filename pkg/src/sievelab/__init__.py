"""Exact enumeration and sieving checks for polygon dissections, rational Dyck
paths, cluster complexes, root posets and symmetric-function evaluations."""

from .dissect import DihedralElement, Dissection, FlavoredDissection
from .dyck import DyckPath, YoungShape
from .errors import DomainError, InternalConsistencyError, NotRationalError, UnsupportedParametersError
from .polyqt import BivariatePolynomial, CyclotomicValue
from .posets import Poset
from .roots import ClusterComplex, RootSystem

__all__ = [
    "BivariatePolynomial",
    "ClusterComplex",
    "CyclotomicValue",
    "DihedralElement",
    "Dissection",
    "DomainError",
    "DyckPath",
    "FlavoredDissection",
    "InternalConsistencyError",
    "NotRationalError",
    "Poset",
    "RootSystem",
    "UnsupportedParametersError",
    "YoungShape",
]
