from dataclasses import dataclass, field
from typing import List


class VerificationError(Exception):
    pass


class ResourceLimitError(VerificationError):
    def __init__(self, l: int, n: int, max_l: int, max_n: int):  # noqa: E741
        super().__init__(
            f'Dimensions (l={l}, n={n}) exceed the resource cap '
            f'(l <= {max_l}, n <= {max_n}); use --force to override.'
        )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ''
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.passed == bool(self.details):
            raise ValueError(
                f'Check {self.name}: details must be empty exactly when it passes'
            )


@dataclass(frozen=True)
class Report:
    l: int  # noqa: E741
    n: int
    dim_spo: int
    dim_quadratic: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)
