# app
from .blocks import BlockDecomposition, ChordalityWitness
from .closed_form import ClosedFormResult, Comparison, CrossValidation
from .generator_spec import GeneratedGraph, GeneratorSpec
from .graph import Graph
from .hull_trace import HullTrace
from .independence import IndependenceVerdict, InvariantValue
from .report import InvariantReport, ScanSummary
from .vertex_set import VertexSet, iter_bits, popcount


__all__ = [
    'BlockDecomposition',
    'ChordalityWitness',
    'ClosedFormResult',
    'Comparison',
    'CrossValidation',
    'GeneratedGraph',
    'GeneratorSpec',
    'Graph',
    'HullTrace',
    'IndependenceVerdict',
    'InvariantReport',
    'InvariantValue',
    'ScanSummary',
    'VertexSet',
    'iter_bits',
    'popcount',
]
