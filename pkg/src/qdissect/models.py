from __future__ import annotations

from enum import Enum
from typing import Annotated, Literal

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, model_validator


def _exponent_text(exp: int) -> str:
    if exp == 1:
        return "q"
    return f"q^{exp}"


def _check_sign(value: int) -> int:
    if value not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return value


Sign = Annotated[int, AfterValidator(_check_sign)]


class ClaimStatus(str, Enum):
    CERTIFIED = "certified"
    VERIFIED = "verified"
    REFUTED = "refuted"
    INAPPLICABLE = "inapplicable"


class CancelMode(str, Enum):
    CERTIFIED = "certified"
    TRUNCATED = "truncated"


class CancelStatus(str, Enum):
    CANCELLED = "cancelled"
    RESIDUAL = "residual"


class Monomial(BaseModel):
    """A signed power of q, sign * q^exp. The exponent may be zero or negative."""

    model_config = ConfigDict(frozen=True)

    sign: Sign = 1
    exp: int = 0

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(sign=self.sign * other.sign, exp=self.exp + other.exp)

    def __truediv__(self, other: Monomial) -> Monomial:
        return Monomial(sign=self.sign * other.sign, exp=self.exp - other.exp)

    def __pow__(self, power: int) -> Monomial:
        if power < 0:
            raise ValueError("monomial powers must be non-negative")
        return Monomial(sign=self.sign**power, exp=self.exp * power)

    def __neg__(self) -> Monomial:
        return Monomial(sign=-self.sign, exp=self.exp)

    def __str__(self) -> str:
        body = "1" if self.exp == 0 else _exponent_text(self.exp)
        return f"-{body}" if self.sign < 0 else body


ONE = Monomial()


class ThetaSpec(BaseModel):
    """Arguments of Ramanujan's f(a, b) = sum_k a^(k(k+1)/2) b^(k(k-1)/2)."""

    model_config = ConfigDict(frozen=True)

    a: Monomial
    b: Monomial

    @model_validator(mode="after")
    def check_convergent(self) -> ThetaSpec:
        if self.a.exp + self.b.exp <= 0:
            raise ValueError("divergent theta spec")
        return self

    @classmethod
    def of(cls, a_exp: int, b_exp: int, a_sign: int = 1, b_sign: int = 1) -> ThetaSpec:
        return cls(a=Monomial(sign=a_sign, exp=a_exp), b=Monomial(sign=b_sign, exp=b_exp))

    def swapped(self) -> ThetaSpec:
        return ThetaSpec(a=self.b, b=self.a)

    def normalized(self) -> ThetaSpec:
        """The same function with its arguments in a fixed order (f(a,b) = f(b,a))."""
        if (self.b.exp, self.b.sign) < (self.a.exp, self.a.sign):
            return self.swapped()
        return self

    def label(self) -> str:
        spec = self.normalized()
        a, b = spec.a, spec.b
        if a.sign > 0 and b.sign > 0 and a.exp > 0:
            if a.exp == b.exp:
                return f"phi({_exponent_text(a.exp)})"
            if b.exp == 3 * a.exp:
                return f"psi({_exponent_text(a.exp)})"
        return str(self)

    def __str__(self) -> str:
        return f"f({self.a},{self.b})"


class ThetaTerm(BaseModel):
    """coeff * shift * prod f(a_i, b_i)."""

    model_config = ConfigDict(frozen=True)

    coeff: int
    shift: Monomial = ONE
    factors: tuple[ThetaSpec, ...] = ()

    def __str__(self) -> str:
        parts = [str(self.coeff)]
        if self.shift != ONE:
            parts.append(str(self.shift))
        parts.extend(spec.label() for spec in self.factors)
        return "*".join(parts)


class PochFactor(BaseModel):
    """(s1 q^a, s2 q^(m-a); q^m)_inf^power, or (q^m; q^m)_inf^power when single."""

    model_config = ConfigDict(frozen=True)

    sign1: Sign = 1
    sign2: Sign = 1
    a: int
    m: int
    power: int = 1
    single: bool = False

    @model_validator(mode="after")
    def check_parameters(self) -> PochFactor:
        if self.power < 1:
            raise ValueError("power must be >= 1")
        if self.m < 1:
            raise ValueError("modulus must be >= 1")
        if self.single:
            if self.a != self.m or self.sign1 != 1 or self.sign2 != 1:
                raise ValueError("single factors are (q^m;q^m) with positive signs")
        elif not 0 < self.a < self.m:
            raise ValueError("pair factors need 0 < a < m")
        return self

    @classmethod
    def euler(cls, m: int, power: int = 1) -> PochFactor:
        return cls(a=m, m=m, power=power, single=True)

    @property
    def b(self) -> int:
        return self.m - self.a

    def normalized(self) -> PochFactor:
        if self.single or self.a <= self.b:
            return self
        return self.model_copy(update={"a": self.b, "sign1": self.sign2, "sign2": self.sign1})

    def __str__(self) -> str:
        base = _exponent_text(self.m)
        power = f"^{self.power}" if self.power != 1 else ""
        if self.single:
            return f"({base};{base}){power}"
        first = str(Monomial(sign=self.sign1, exp=self.a))
        second = str(Monomial(sign=self.sign2, exp=self.b))
        return f"({first},{second};{base}){power}"


class ProductSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    factors: tuple[PochFactor, ...] = Field(min_length=1)

    def key(self) -> tuple[tuple[int, int, int, int, int, bool], ...]:
        return tuple(
            sorted(
                (f.m, f.a, f.sign1, f.sign2, f.power, f.single)
                for f in (factor.normalized() for factor in self.factors)
            )
        )

    def __str__(self) -> str:
        return " ".join(str(factor) for factor in self.factors)


class QuadLatticeSum(BaseModel):
    """sign * q^shift * sum over (m, n) of q^((a2 m^2 + b2 m + c2 n^2 + d2 n) / 2)."""

    model_config = ConfigDict(frozen=True)

    shift: int = 0
    sign: Sign = 1
    a2: int
    b2: int
    c2: int
    d2: int

    @model_validator(mode="after")
    def check_form(self) -> QuadLatticeSum:
        if self.a2 <= 0 or self.c2 <= 0:
            raise ValueError("quadratic coefficients must be positive")
        if (self.a2 - self.b2) % 2 or (self.c2 - self.d2) % 2:
            raise ValueError("lattice exponents must be integral")
        return self

    def exponent(self, m: int, n: int) -> int:
        return (self.a2 * m * m + self.b2 * m + self.c2 * n * n + self.d2 * n) // 2 + self.shift

    def __str__(self) -> str:
        sign = "-" if self.sign < 0 else "+"
        form = f"{self.a2}m^2{self.b2:+d}m{self.c2:+d}n^2{self.d2:+d}n"
        return f"{sign}q^{self.shift}*sum q^(({form})/2)"


class ResidueClassDecomp(BaseModel):
    """The residue-r component of `parent` modulo t, one part per solution class."""

    model_config = ConfigDict(frozen=True)

    t: int
    r: int
    parent: QuadLatticeSum
    periods: tuple[int, int]
    classes: tuple[tuple[int, int], ...]
    parts: tuple[QuadLatticeSum, ...]


class BinaryFormSum(BaseModel):
    """sign * sum over y in Z^2 of q^(F(y)/2), F = a y1^2 + b y1 y2 + c y2^2 + d y1 + e y2 + f."""

    model_config = ConfigDict(frozen=True)

    sign: Sign = 1
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    @model_validator(mode="after")
    def check_form(self) -> BinaryFormSum:
        if self.a <= 0 or self.c <= 0 or 4 * self.a * self.c - self.b * self.b <= 0:
            raise ValueError("binary form must be positive definite")
        if self.f % 2 or (self.a + self.d) % 2 or (self.c + self.e) % 2 or self.b % 2:
            raise ValueError("binary form exponents must be integral")
        return self

    @property
    def discriminant(self) -> int:
        return 4 * self.a * self.c - self.b * self.b

    def key(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)


class CancellationReport(BaseModel):
    t: int
    r: int
    mode: CancelMode
    status: CancelStatus
    pairing: list[tuple[int, int]] = Field(default_factory=list)
    residual_first_exponent: int | None = None


class Claim(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    spec: ProductSpec
    t: int
    r: int
    source: str
    related: tuple[str, ...] = ()

    @model_validator(mode="after")
    def check_progression(self) -> Claim:
        if self.t < 1:
            raise ValueError("modulus t must be >= 1")
        if not 0 <= self.r < self.t:
            raise ValueError("residue must satisfy 0 <= r < t")
        return self


class Counterexample(BaseModel):
    n: int
    coeff: str


class ProofGroup(BaseModel):
    coefficient: int
    multipliers: list[str] = Field(default_factory=list)
    lattice_sums: list[QuadLatticeSum] = Field(default_factory=list)
    cancellation: CancellationReport
    truncated: CancellationReport | None = None


class ProofReport(BaseModel):
    claim_id: str
    status: ClaimStatus
    order: int
    first_counterexample: Counterexample | None = None
    groups: list[ProofGroup] | None = None
    rewrite: list[str] = Field(default_factory=list)
    reason: str | None = None

    @model_validator(mode="after")
    def check_counterexample(self) -> ProofReport:
        if self.status == ClaimStatus.REFUTED and self.first_counterexample is None:
            raise ValueError("refuted reports need a counterexample")
        return self


class FactorTemplate(BaseModel):
    """One Pochhammer pair with its free offsets and admissible signs."""

    model_config = ConfigDict(frozen=True)

    modulus: int
    offsets: list[int] = Field(min_length=1)
    power: int = 1
    signs: list[int] = Field(default_factory=lambda: [1], min_length=1)

    @model_validator(mode="after")
    def check_template(self) -> FactorTemplate:
        if self.power < 1:
            raise ValueError("power must be >= 1")
        for offset in self.offsets:
            if not 0 < offset < self.modulus:
                raise ValueError(f"offset {offset} outside 1..{self.modulus - 1}")
        for sign in self.signs:
            _check_sign(sign)
        return self


class FamilyTemplate(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    small: FactorTemplate
    large: FactorTemplate
    t: int
    order: int = 500
    description: str = ""

    @model_validator(mode="after")
    def check_family(self) -> FamilyTemplate:
        if self.large.modulus % self.small.modulus:
            raise ValueError("small modulus must divide large modulus")
        if self.t < 2:
            raise ValueError("scan modulus must be >= 2")
        if self.order < 200:
            raise ValueError("scan order must be >= 200")
        return self


class Finding(BaseModel):
    spec: str
    t: int
    r: int
    order: int
    evidence: Literal["empirical", "certified"] = "empirical"
    catalog_id: str | None = None
    novelty: Literal["catalog", "new-empirical"] = "new-empirical"


class ScanReport(BaseModel):
    family: str
    t: int
    order: int
    findings: list[Finding] = Field(default_factory=list)


class ClaimRecord(BaseModel):
    id: str
    status: ClaimStatus
    order: int
    first_counterexample: Counterexample | None = None
    groups: list[CancellationReport] | None = None


class RunSummary(BaseModel):
    certified: int = 0
    verified: int = 0
    refuted: int = 0
    inapplicable: int = 0


class RunReport(BaseModel):
    claims: list[ClaimRecord] = Field(default_factory=list)
    summary: RunSummary = Field(default_factory=RunSummary)
