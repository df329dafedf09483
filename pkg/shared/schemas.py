"""
Group specs and command output schemas
GroupSpec is used by the CLI parser and by core_groups.make_realization
"""
from decimal import Decimal
from typing import List, Literal, Optional

from pydantic import BaseModel, model_validator

GroupKind = Literal["zn", "free", "lamplighter", "heisenberg", "bs", "grigorchuk", "matrix", "cyclic"]

# single-letter generator names, 'e' left out so it can denote the identity
GENERATOR_LETTERS = "xyzuvwpqrstabcdfghjklmno"


def default_generator_names(k: int) -> tuple:
    if k <= len(GENERATOR_LETTERS):
        return tuple(GENERATOR_LETTERS[:k])
    return tuple(f"g{i}" for i in range(k))


class GroupSpec(BaseModel):
    kind: GroupKind
    dimension: Optional[int] = None  # zn
    order: Optional[int] = None  # cyclic
    rank: Optional[int] = None  # free
    modulus: Optional[int] = None  # lamplighter
    bs_p: Optional[int] = None
    bs_q: Optional[int] = None
    prefix: Optional[str] = None  # grigorchuk
    period: Optional[str] = None
    path: Optional[str] = None  # matrix
    label: Optional[str] = None

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _parameters_present(self):
        required = {
            "zn": ("dimension",),
            "cyclic": ("order",),
            "free": ("rank",),
            "lamplighter": ("modulus",),
            "heisenberg": (),
            "bs": ("bs_p", "bs_q"),
            "grigorchuk": ("prefix", "period"),
            "matrix": ("path",),
        }[self.kind]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.kind} spec is missing {', '.join(missing)}")
        return self

    def render(self) -> str:
        """Inverse of cli.spec_parser.parse_spec"""
        if self.kind == "zn":
            return f"z:{self.dimension}"
        if self.kind == "cyclic":
            return f"cyclic:{self.order}"
        if self.kind == "free":
            return f"free:{self.rank}"
        if self.kind == "lamplighter":
            return f"lamplighter:{self.modulus}"
        if self.kind == "heisenberg":
            return "heisenberg"
        if self.kind == "bs":
            return f"bs:{self.bs_p},{self.bs_q}"
        if self.kind == "grigorchuk":
            return f"grigorchuk:{self.prefix}({self.period})*"
        return f"matrix:{self.path}"

    @property
    def display_name(self) -> str:
        return self.label or self.render()


# ── command outputs ──────────────────────────────────────────────────────
class GrowthRow(BaseModel):
    n: int
    sphere: int
    gamma: int
    naive: Optional[Decimal] = None  # undefined at n = 0
    upper: Optional[Decimal] = None


class GrowthReport(BaseModel):
    group: str
    radius: int
    complete: bool = True  # False when the cap stopped enumeration early
    rows: List[GrowthRow]
    entropy_upper: Optional[Decimal] = None


class IsomorphismReport(BaseModel):
    group_a: str
    group_b: str
    radius: int
    isomorphic: bool


class ConvergenceReport(BaseModel):
    group_a: str
    group_b: str
    max_radius: int
    conv_radius: int

