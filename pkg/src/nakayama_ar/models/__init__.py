"""Pydantic models for algebra files and structured reports."""

from pydantic import BaseModel, ConfigDict, Field


class AlgebraFile(BaseModel):
    """Algebra description as stored in a JSON or YAML file."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=1, description="Number of vertices")
    relations: list[tuple[int, int]] = Field(
        default_factory=list, description="Zero paths as vertex intervals [u, v]"
    )
    name: str | None = None


class SummandReport(BaseModel):
    """One indecomposable summand."""

    name: str
    descriptor: str
    multiplicity: int = 1


class TriangleReport(BaseModel):
    """An AR triangle start -> middle -> end."""

    algebra: str
    end: str
    start: str
    middle: list[SummandReport]
    stripped: list[str] = Field(default_factory=list)


class OrbitReport(BaseModel):
    """One tau-orbit of a component."""

    label: str
    cycle: int
    residue: int
    tau_period: int
    shift: int
    shift_image: str
    valency: int


class ComponentReport(BaseModel):
    """Summary of a knitted component."""

    algebra: str
    closed: bool
    classes: int
    triangles: int
    orbit_count: int
    orbits: list[OrbitReport]
    valencies: list[int]
    verdict: str
    shift_power: int | None = None
    shift_fixes_orbits: bool
    strip_events: list[str] = Field(default_factory=list)


class CheckReport(BaseModel):
    """Outcome of one assertion of a verifier."""

    name: str
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    """Outcome of a verifier run."""

    name: str
    passed: bool
    checks: list[CheckReport]

    @property
    def first_failure(self) -> CheckReport | None:
        return next((c for c in self.checks if not c.passed), None)
