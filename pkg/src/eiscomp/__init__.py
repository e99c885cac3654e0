"""
Exact computations around the cohomology of GL_3(Z) and GL_4(Z): Euler
characteristics from torsion, Kostant data on boundary faces, the boundary
spectral sequence, and the ghost class analysis for GL_3(Z).
"""

from .euler import euler_characteristic, table1
from .faces import face_cohomology
from .ghost import branch_analysis, potentially_ghost, prove_ghost
from .levi import Branch, ModuleLabel, load_registry
from .spectral import boundary_cohomology, build_e1, e2
from .weyl import Composition, WeylWord, dot_action, kostant_reps, parse_face

__version__ = "0.1.0"

__all__ = [
    "Branch", "Composition", "ModuleLabel", "WeylWord", "boundary_cohomology",
    "branch_analysis", "build_e1", "dot_action", "e2", "euler_characteristic",
    "face_cohomology", "kostant_reps", "load_registry", "parse_face",
    "potentially_ghost", "prove_ghost", "table1",
]
