"""Crystal commutors for minuscule tensor products.

Root systems and Weyl combinatorics live in :mod:`.cartan`, crystals and
their operators in :mod:`.crystal`, the commutor constructions in
:mod:`.commutor`, bounded exhaustive verification in :mod:`.checks`, and
the command line interface in :mod:`.cli`.
"""

from .cartan import (
    DecompositionError,
    MinusculeDecomposition,
    RootSystem,
    UnsupportedTypeError,
    root_system,
)
from .commutor import (
    Block,
    BlockedElement,
    GrowthDiagram,
    LocalMoveError,
    QuasiMinusculeError,
    blocked_element,
    cactus_s,
    commutor_on_concat,
    decompose_blocked,
    decompose_tensor,
    growth_rectangle,
    hk_commutor,
    hk_commutor_alt,
    jdt_commutor,
    local_move,
    local_move_as_commutor,
    sigma_prq,
)
from .crystal import (
    TensorElement,
    TensorShape,
    component_members,
    crystal_leq,
    element,
    embed_highest,
    empty_element,
    max_elements,
    shape,
)

__all__ = [
    "Block",
    "BlockedElement",
    "DecompositionError",
    "GrowthDiagram",
    "LocalMoveError",
    "MinusculeDecomposition",
    "QuasiMinusculeError",
    "RootSystem",
    "TensorElement",
    "TensorShape",
    "UnsupportedTypeError",
    "blocked_element",
    "cactus_s",
    "commutor_on_concat",
    "component_members",
    "crystal_leq",
    "decompose_blocked",
    "decompose_tensor",
    "element",
    "embed_highest",
    "empty_element",
    "growth_rectangle",
    "hk_commutor",
    "hk_commutor_alt",
    "jdt_commutor",
    "local_move",
    "local_move_as_commutor",
    "max_elements",
    "root_system",
    "shape",
]
