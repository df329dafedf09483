"""
Realization factory: GroupSpec -> GroupRealization
"""
import logging

from core_groups.base import GroupRealization
from core_groups.free import FreeRealization
from core_groups.grigorchuk import GrigorchukRealization, OmegaSequence
from core_groups.matrix import (
    MatrixRealization,
    baumslag_solitar_generators,
    cyclic_generator,
    heisenberg_generators,
    lattice_generators,
    load_matrix_file,
)
from core_groups.wreath import LamplighterRealization
from shared.errors import SpecValueError
from shared.schemas import GroupSpec, default_generator_names

logger = logging.getLogger("RealizationFactory")

# kinds the metabelian non-polycyclic cross-check accepts
METABELIAN_NON_POLYCYCLIC = {"lamplighter", "bs"}


def make_realization(spec: GroupSpec) -> GroupRealization:
    name = spec.display_name
    kind = spec.kind

    if kind == "free":
        if spec.rank < 1:
            raise SpecValueError(f"free group rank must be >= 1, got {spec.rank}")
        realization = FreeRealization(name, spec.rank, default_generator_names(spec.rank))
    elif kind == "lamplighter":
        realization = LamplighterRealization(name, spec.modulus)
    elif kind == "zn":
        if spec.dimension < 1:
            raise SpecValueError(f"z:d needs d >= 1, got {spec.dimension}")
        realization = MatrixRealization(name, lattice_generators(spec.dimension), default_generator_names(spec.dimension))
    elif kind == "cyclic":
        if spec.order < 1:
            raise SpecValueError(f"cyclic:N needs N >= 1, got {spec.order}")
        realization = MatrixRealization(name, [cyclic_generator(spec.order)], ("x",))
    elif kind == "heisenberg":
        realization = MatrixRealization(name, heisenberg_generators(), ("x", "y"))
    elif kind == "bs":
        realization = MatrixRealization(name, baumslag_solitar_generators(spec.bs_p, spec.bs_q), ("a", "t"))
    elif kind == "grigorchuk":
        realization = GrigorchukRealization(name, OmegaSequence(spec.prefix, spec.period))
    elif kind == "matrix":
        generators = load_matrix_file(spec.path)
        realization = MatrixRealization(name, generators, default_generator_names(len(generators)))
    else:
        raise SpecValueError(f"unknown group kind '{kind}'")

    realization.spec = spec
    logger.debug(f"Built {realization!r}")
    return realization
