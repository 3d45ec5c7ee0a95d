"""Assemblies - realizability over applicative structures"""

from .assembly import (
    Assembly, AssemblyMap, HomAssembly, LeftHomAssembly, MapReport, MapVerdict, UNIT_POINT,
    check_map, check_multimap, search_realizer, tracks, all_functions, compose_functions,
    unit_assembly, tensor_assembly, pair_realizer,
)
from .recipes import RealizedMap, SuiteReport, closed_structure_suite, prepare, INSTANCE_NOTE
from .morphisms import (
    MorphismSpec, MorphismReport, identity_morphism, compose, check_realizer, check_preorder,
    check_morphism, check_adjoint, check_comonadic,
)
from .loader import AssemblyFile, load_assembly_file

__all__ = [
    'Assembly', 'AssemblyMap', 'HomAssembly', 'LeftHomAssembly', 'MapReport', 'MapVerdict',
    'UNIT_POINT', 'check_map', 'check_multimap', 'search_realizer', 'tracks', 'all_functions',
    'compose_functions', 'unit_assembly', 'tensor_assembly', 'pair_realizer',
    'RealizedMap', 'SuiteReport', 'closed_structure_suite', 'prepare', 'INSTANCE_NOTE',
    'MorphismSpec', 'MorphismReport', 'identity_morphism', 'compose', 'check_realizer',
    'check_preorder', 'check_morphism', 'check_adjoint', 'check_comonadic',
    'AssemblyFile', 'load_assembly_file',
]
