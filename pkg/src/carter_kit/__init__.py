"""Finite permutation groups: stabilizer chains, series, induced automorphisms
and Carter subgroups, with a verification harness."""
from .config import CONFIG, CapacityError, Config, override
from .permcore import Epimorphism, Group, compose, group_from_generators, inverse
from .recognize import FactorId, GroupSpec, construct
from .series import Section, Series, chief_series, composition_series, rc_series, sections_of
from .carter import CarterWitness, carter_subgroups, is_carter
from .induced import InducedAutGroup, induced_aut

__all__ = [
    "CONFIG", "CapacityError", "Config", "override",
    "Epimorphism", "Group", "compose", "group_from_generators", "inverse",
    "FactorId", "GroupSpec", "construct",
    "Section", "Series", "chief_series", "composition_series", "rc_series", "sections_of",
    "CarterWitness", "carter_subgroups", "is_carter",
    "InducedAutGroup", "induced_aut",
]
__version__ = "0.1.0"
