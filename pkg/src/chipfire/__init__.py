"""Chip-firing on pleasantly weighted multigraphs: Jacobians, balanced
Jacobians, sub-weighted spanning trees, tree tours, and component groups
of special fibers."""

from .errors import ChipfireError, GraphInputError, PreconditionError
from .graphs import (Edge, HatGraph, SplitPlan, ValidationReport,
                     VertexSplitMap, WeightedMultigraph, add_leaf,
                     component_genera, expand_hat, is_pleasant,
                     shrink_vertex_weight, split_edge, split_vertex,
                     validate, vertex_gcd, weighted_genus)
from .divisors import (Divisor, EquivalenceCertificate, LaplacianSystem,
                       UnbalancingClass, chip_fire, degree, equivalent,
                       is_balanced, laplacian, unbalancing_class)
from .trees import enumerate_forests, enumerate_trees, is_maximal_forest
from .picard import (AbelianGroupStructure, count_pic0, count_picb0,
                     enumerate_coset_representatives_bruteforce,
                     pic0_structure, picb0_structure)
from .bernardi import (BernardiReducer, Orientation, SubweightedTree,
                       enumerate_subweightings, hat_tree_to_pair,
                       orientation_divisor, reduce, torsor_act, tour,
                       tour_forest, tree_divisor, trivial_subweighting)
from .fibers import (InjectivityReport, SpecialFiberDescription,
                     balanced_representatives, check_base_change_injectivity,
                     component_group, dual_graph, phi_note, psi_map)
from .family import pleasant_family
from .selfcheck import run_selfcheck

__all__ = [
    "ChipfireError", "GraphInputError", "PreconditionError",
    "Edge", "HatGraph", "SplitPlan", "ValidationReport", "VertexSplitMap",
    "WeightedMultigraph", "add_leaf", "component_genera", "expand_hat",
    "is_pleasant", "shrink_vertex_weight", "split_edge", "split_vertex",
    "validate", "vertex_gcd", "weighted_genus",
    "Divisor", "EquivalenceCertificate", "LaplacianSystem",
    "UnbalancingClass", "chip_fire", "degree", "equivalent", "is_balanced",
    "laplacian", "unbalancing_class",
    "enumerate_forests", "enumerate_trees", "is_maximal_forest",
    "AbelianGroupStructure", "count_pic0", "count_picb0",
    "enumerate_coset_representatives_bruteforce", "pic0_structure",
    "picb0_structure",
    "BernardiReducer", "Orientation", "SubweightedTree",
    "enumerate_subweightings", "hat_tree_to_pair", "orientation_divisor",
    "reduce", "torsor_act", "tour", "tour_forest", "tree_divisor",
    "trivial_subweighting",
    "InjectivityReport", "SpecialFiberDescription",
    "balanced_representatives", "check_base_change_injectivity",
    "component_group", "dual_graph", "phi_note", "psi_map",
    "pleasant_family", "run_selfcheck",
]
