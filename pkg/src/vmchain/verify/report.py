from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "vmchain-verify-report/1"


@dataclass
class VerifyReport:
    suite: str
    trials: int  # requested
    seed: int | None  # None for exhaustive sweeps
    effective_trials: int = 0  # instances that met the suite's hypotheses
    counterexamples: list[dict] = field(default_factory=list)
    elapsed_ms: int | None = None  # only filled in when timing is requested
    mode: str = "sampled"

    @property
    def failures(self) -> int:
        return len(self.counterexamples)

    @property
    def starved(self) -> bool:
        return self.mode == "sampled" and self.effective_trials < self.trials

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "mode": self.mode,
            "trials": self.trials,
            "effective_trials": self.effective_trials,
            "starved": self.starved,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
