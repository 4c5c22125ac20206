"""Exact computations for stability conditions on the 2-CY categories of the A2 and affine A1 quivers."""

from .automata import HNVector, build_automaton, occurrences_from_hn, run
from .braids import BraidWord, NormalForm, normalize, parse_word
from .psl2 import ProjMatrix, ProjPoint, point_of, word_matrix
from .stability import TypeACharge, gromov, mass_of_object, pi_map

__all__ = [
    "BraidWord", "HNVector", "NormalForm", "ProjMatrix", "ProjPoint", "TypeACharge",
    "build_automaton", "gromov", "mass_of_object", "normalize", "occurrences_from_hn",
    "parse_word", "pi_map", "point_of", "run", "word_matrix",
]
