"""Graph constructions from the hardness reductions."""
from .gadgets import (
    GADGET,
    exact_mk_set,
    gadget_join,
    gadget_vertices,
    multi_gadget_join,
    parity_pair,
    times,
)
from .heggernes_telle import beta_equals_alpha_check, ht_one_in_three, ht_parts, thm6_construct
from .kaplan_shamir import kaplan_shamir
from .nae import NaeLayout, nae_construct, nae_layout

__all__ = [
    "GADGET",
    "NaeLayout",
    "beta_equals_alpha_check",
    "exact_mk_set",
    "gadget_join",
    "gadget_vertices",
    "ht_one_in_three",
    "ht_parts",
    "kaplan_shamir",
    "multi_gadget_join",
    "nae_construct",
    "nae_layout",
    "parity_pair",
    "thm6_construct",
    "times",
]
