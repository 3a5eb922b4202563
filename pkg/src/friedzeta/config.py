"""Flat key-value run configuration.

Config files hold ``section.key = value`` lines (``#`` comments allowed);
every key can also be set on the command line with ``--set key=value``,
and the command line wins.  The resolved mapping is echoed into every
report so a run can be reproduced exactly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import ValidationError
from .kleinian import MobiusGenerator
from .toral import Character, SuspensionModel, ToralAutomorphism
from .trig import TrigPolynomial
from .zetas import TruncationPolicy

__all__ = ["RunConfig", "parse_trig", "parse_complex_list"]


def parse_trig(text: str) -> TrigPolynomial:
    """Parse ``const:<v> cos:<k1>,<k2>:<amp> sin:<k1>,<k2>:<amp> ...``."""
    constant = 0.0
    terms: dict[tuple[int, int], list[float]] = {}
    for token in text.split():
        parts = token.split(":")
        kind = parts[0].lower()
        if kind == "const":
            if len(parts) != 2:
                raise ValidationError(f"bad trig token {token!r}")
            constant += float(parts[1])
        elif kind in ("cos", "sin"):
            if len(parts) != 3:
                raise ValidationError(f"bad trig token {token!r}")
            k1, k2 = (int(x) for x in parts[1].split(","))
            amp = float(parts[2])
            slot = terms.setdefault((k1, k2), [0.0, 0.0])
            slot[0 if kind == "cos" else 1] += amp
        else:
            raise ValidationError(f"unknown trig term kind {kind!r}")
    return TrigPolynomial(
        constant=constant,
        terms=tuple((k1, k2, a, b) for (k1, k2), (a, b) in sorted(terms.items())),
    )


def parse_complex_list(text: str) -> list[complex]:
    return [complex(tok.replace("i", "j")) for tok in text.replace(";", ",").split(",") if tok.strip()]


def _parse_grid(text: str) -> list[float]:
    text = text.strip()
    if ":" in text:
        start, step, count = text.split(":")
        start, step, count = float(start), float(step), int(count)
        return [start + i * step for i in range(count)]
    return [float(tok) for tok in text.split(",") if tok.strip()]


@dataclass
class RunConfig:
    values: dict[str, str] = field(default_factory=dict)

    @classmethod
    def load(cls, path: str | None, overrides: list[str] | None = None) -> "RunConfig":
        values: dict[str, str] = {}
        if path:
            if not os.path.exists(path):
                raise ValidationError(f"config file {path!r} does not exist")
            with open(path, "r", encoding="utf-8") as fh:
                for raw in fh:
                    line = raw.split("#", 1)[0].strip()
                    if not line:
                        continue
                    if "=" not in line:
                        raise ValidationError(f"bad config line {raw.rstrip()!r}")
                    key, val = line.split("=", 1)
                    values[key.strip()] = val.strip()
        for item in overrides or []:
            if "=" not in item:
                raise ValidationError(f"bad --set override {item!r}")
            key, val = item.split("=", 1)
            values[key.strip()] = val.strip()
        return cls(values)

    # -- raw access ---------------------------------------------------------

    def get(self, key: str, default: str | None = None, required: bool = False) -> str | None:
        if key in self.values:
            return self.values[key]
        if required:
            raise ValidationError(f"missing required config key {key!r}")
        return default

    def get_int(self, key: str, default: int | None = None) -> int | None:
        raw = self.get(key)
        return int(raw) if raw is not None else default

    def get_float(self, key: str, default: float | None = None) -> float | None:
        raw = self.get(key)
        return float(raw) if raw is not None else default

    def require_path(self, key: str) -> str:
        path = self.get(key, required=True)
        if not os.path.exists(path):
            raise ValidationError(f"{key} = {path!r} does not exist")
        return path

    # -- typed sections ------------------------------------------------------

    def model(self) -> SuspensionModel:
        raw = self.get("model.matrix", required=True)
        entries = [int(x) for x in raw.replace(",", " ").split()]
        if len(entries) != 4:
            raise ValidationError("model.matrix needs 4 integers")
        auto = ToralAutomorphism(((entries[0], entries[1]), (entries[2], entries[3])))
        roof = parse_trig(self.get("model.roof", "const:1.0"))
        tc_raw = self.get("model.time_change")
        time_change = parse_trig(tc_raw) if tc_raw else None
        return SuspensionModel(auto, roof, time_change)

    def character(self, automorphism: ToralAutomorphism) -> Character:
        frac = self.get_float("rep.u_fraction", 0.0)
        exps_raw = self.get("rep.fiber_exponents", "")
        orders = automorphism.coker_orders
        if exps_raw.strip():
            exps = tuple(int(x) for x in exps_raw.split())
            if len(exps) != len(orders):
                raise ValidationError("rep.fiber_exponents length must match coker factor count")
        else:
            exps = tuple(0 for _ in orders)
        return Character.from_angle_fraction(frac, orders, exps)

    def policy(self, model: SuspensionModel | None = None, tau: float = 0.0) -> TruncationPolicy:
        entropy = self.get_float("policy.entropy")
        if entropy is None:
            if model is None:
                raise ValidationError("policy.entropy is required without a model section")
            entropy = model.default_entropy(tau)
        workers = self.get_int("policy.workers")
        return TruncationPolicy(
            max_period=self.get_int("policy.n_max", 12),
            j_max=self.get_int("policy.j_max", 16),
            p_max=self.get_int("policy.p_max", 60),
            entropy=entropy,
            tail_tol=self.get_float("policy.tail_tol", 1e-12),
            quad_subdiv=self.get_int("policy.quad_subdiv", 16),
            workers=workers,
        )

    def tau_grid(self, model: SuspensionModel | None = None) -> list[float]:
        grid = _parse_grid(self.get("tau.grid", "0.0"))
        if model is not None:
            for t in grid:
                model.require_tau(t)
        return grid

    def lambda_grid(self) -> list[complex]:
        return parse_complex_list(self.get("lambda.grid", required=True))

    def generators(self) -> list[MobiusGenerator]:
        raw = self.get("spectrum.generators", required=True)
        gens = []
        for block in raw.split(";"):
            vals = [float(x) for x in block.replace(",", " ").split()]
            if len(vals) != 8:
                raise ValidationError("each generator needs 8 floats (re, im for 4 entries)")
            gens.append(
                MobiusGenerator(
                    (
                        (complex(vals[0], vals[1]), complex(vals[2], vals[3])),
                        (complex(vals[4], vals[5]), complex(vals[6], vals[7])),
                    )
                )
            )
        return gens
