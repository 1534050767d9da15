from typing import Any, Dict, List, Literal, Optional

import galois
from pydantic import BaseModel, Field, computed_field, model_validator

OutputFormat = Literal["text", "json", "csv"]

MAX_FIELD_ORDER = 2**16


class Budgets(BaseModel):
    """计算预算"""

    subset_scan: int = Field(20_000, ge=1)
    min_weight: int = Field(2**27, ge=1)
    subspaces: int = Field(10**7, ge=1)


class CacheSettings(BaseModel):
    """结果缓存配置"""

    directory: str = "./data/cache"
    enabled: bool = True


class Settings(BaseModel):
    """运行配置"""

    budgets: Budgets = Budgets()
    cache: CacheSettings = CacheSettings()
    threads: int = Field(1, ge=1)
    log_level: str = "WARNING"


class RunConfig(BaseModel):
    """一次命令行调用的规范化参数"""

    command: str
    q: int
    s: int
    u: Optional[int] = None
    modulus: Optional[List[int]] = None
    monomial_spec: Optional[str] = None
    options: Dict[str, Any] = {}
    output: OutputFormat = "text"
    threads: int = Field(1, ge=1)
    budget: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def check_field(self) -> "RunConfig":
        if not galois.is_prime_power(self.q):
            raise ValueError(f"q={self.q} is not a prime power")
        if self.s < 2:
            raise ValueError(f"s={self.s} must be at least 2")
        if self.q**self.s > MAX_FIELD_ORDER:
            raise ValueError(f"q^s={self.q ** self.s} exceeds {MAX_FIELD_ORDER}")
        return self

    def cache_payload(self) -> str:
        """决定计算结果的全部配置, 规范化为 JSON"""
        return self.model_dump_json(exclude={"output", "threads"})


class CurveInfo(BaseModel):
    """曲线参数"""

    q: int
    s: int
    u: int
    n: int
    genus: int


class FieldReport(BaseModel):
    """有限域报告"""

    schema_version: Literal[1] = Field(1, alias="schema")
    p: int
    a: int
    s: int
    order: int
    modulus: List[int]
    subfield: List[int]


class CurveReport(BaseModel):
    """曲线点集报告"""

    schema_version: Literal[1] = Field(1, alias="schema")
    curve: CurveInfo
    points: Optional[List[List[int]]] = None


class CodeReport(BaseModel):
    """评估码报告"""

    schema_version: Literal[1] = Field(1, alias="schema")
    curve: CurveInfo
    monomials: List[str]
    n: int
    k: int
    dual: Optional[str] = None
    dual_dimension: Optional[int] = None
    min_weight: Optional[int] = None
    generators: Optional[List[List[int]]] = None


class GhwRow(BaseModel):
    """单个广义汉明重量"""

    r: int
    d_r: int
    witness: List[str]
    method: str
    exact: bool
    search: Optional[str] = None
    cartesian: Optional[int] = None
    singleton: int


class GhwReport(BaseModel):
    """重量层级报告"""

    schema_version: Literal[1] = Field(1, alias="schema")
    curve: CurveInfo
    monomials: List[str]
    k: int
    results: List[GhwRow]
    notes: List[str] = []


class RghwRow(BaseModel):
    """单个相对广义汉明重量"""

    r: int
    M_r: int
    exact: bool
    condition_held: bool
    witness: List[str]


class RghwReport(BaseModel):
    """相对重量报告"""

    schema_version: Literal[1] = Field(1, alias="schema")
    curve: CurveInfo
    m1: List[str]
    m2: List[str]
    results: List[RghwRow]
    notes: List[str] = []


class PresetRow(BaseModel):
    """已发表的量子码参数行"""

    lambda1: int
    lambda2: int
    n: int
    k: int
    delta_z: int
    delta_x: int
    impure: bool = False
    g: Optional[str] = None
    note: Optional[str] = None


class PresetTable(BaseModel):
    """量子码参数预设"""

    q: int
    s: int
    u: int
    rows: List[PresetRow]


class QuantumRow(BaseModel):
    """量子码参数"""

    lambda1: Optional[int] = None
    lambda2: Optional[int] = None
    n: int
    k: int
    delta_z: int
    delta_x: int
    impure: bool
    d1_C1: int
    d1_C2perp: int
    alphabet: int
    exact: bool
    provenance: Dict[str, Dict[str, int]]
    matches_published: Optional[bool] = None
    g: Optional[str] = None
    note: Optional[str] = None


class QuantumReport(BaseModel):
    """量子码参数表报告"""

    schema_version: Literal[1] = Field(1, alias="schema")
    curve: CurveInfo
    preset: Optional[str] = None
    rows: List[QuantumRow]
    purity_note: str


class VerifyCheck(BaseModel):
    """单项校验结果"""

    name: str
    passed: bool
    detail: str = ""


class VerifyReport(BaseModel):
    """校验报告"""

    schema_version: Literal[1] = Field(1, alias="schema")
    suite: str
    checks: List[VerifyCheck]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def dump_report(report: BaseModel) -> Dict[str, Any]:
    """转换为带 schema 版本号的 JSON 字典"""
    return report.model_dump(mode="json", by_alias=True)
