"""Machine-readable reports.

All rationals are written as exact strings (``"3"``, ``"-4/3"``).  The only
floating-point content lives under ``approximate``, which always carries its
tolerance.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .algebra import Poly, RealRootCertificate, isolate_real_roots
from .classify import FamilyMatch
from .expr import format_ratfun
from .ratfun import RatFun
from .verify import HypothesisReport

FORMAT_VERSION = "1.0"


def rat(x: Fraction | int) -> str:
    return str(Fraction(x))


def poly_dict(p: Poly) -> dict:
    return {"expr": format_ratfun(RatFun(p), factor=False), "coeffs": [rat(c) for c in p.coeffs]}


def intervals(pairs) -> list[list[str]]:
    return [[rat(a), rat(b)] for a, b in pairs]


def _cert(c: RealRootCertificate) -> dict:
    return {"ok": c.all_real, "distinct_degree": c.degree, "real_roots": c.real_count,
            "sturm_length": len(c.chain.chain)}


def hypotheses_summary(h: HypothesisReport) -> dict:
    return {
        "f_zeros_real": _cert(h.f_zeros_real),
        "f_poles_real": _cert(h.f_poles_real),
        "fprime_zeros_real": _cert(h.fprime_zeros_real),
        "fprime_poles_real": _cert(h.fprime_poles_real),
        "fpp_over_f_zerofree": {
            "ok": h.fpp_over_f_zerofree.ok,
            "numerator": poly_dict(h.fpp_over_f_zerofree.numerator),
        },
        "fpp_zeros_real": _cert(h.fpp_zeros_real),
        "fpp_poles_real": _cert(h.fpp_poles_real),
        "overall": h.overall,
    }


def match_summary(fm: FamilyMatch) -> dict:
    out = {
        "status": fm.status,
        "exact": fm.exact,
        "reason": fm.reason,
        "S": poly_dict(fm.S) if fm.S is not None else None,
    }
    if fm.spec is not None:
        s = fm.spec
        out.update({
            "family": s.tag.value,
            "n": s.n,
            "K": rat(s.K) if s.K is not None else None,
            "Q": s.Q,
            "frame": [rat(a) for a in s.frame],
            "ode_constant": rat(fm.ode_constant),
        })
    return out


@dataclass
class Report:
    command: str
    input: str
    m: int | None = None
    hypotheses: dict | None = None
    classification: dict | None = None
    ode: dict | None = None
    certificates: dict = field(default_factory=dict)
    approximate: dict | None = None
    format_version: str = FORMAT_VERSION

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(**d)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"input: {self.input}"]
        if self.m is not None:
            lines.append(f"m: {self.m}")
        if self.hypotheses is not None:
            h = self.hypotheses
            lines.append(f"hypotheses: {'PASS' if h['overall'] else 'FAIL'}")
            for key in ("f_zeros_real", "f_poles_real", "fprime_zeros_real",
                        "fprime_poles_real"):
                c = h[key]
                lines.append(f"  {key}: {'ok' if c['ok'] else 'FAIL'} "
                             f"({c['real_roots']}/{c['distinct_degree']} real)")
            zf = h["fpp_over_f_zerofree"]
            lines.append(f"  fpp_over_f_zerofree: {'ok' if zf['ok'] else 'FAIL'} "
                         f"(numerator {zf['numerator']['expr']})")
            c = h["fpp_zeros_real"]
            lines.append(f"  fpp_zeros_real (info): {'ok' if c['ok'] else 'FAIL'} "
                         f"({c['real_roots']}/{c['distinct_degree']} real)")
        if self.ode is not None:
            lines.append(f"ode: ({self.ode['coefficient']})*y'' = {self.ode['constant']}*y"
                         f" -> residual {self.ode['residual']}")
        if self.classification is not None:
            c = self.classification
            if c["status"] == "MATCH":
                params = ", ".join(f"{k}={c[k]}" for k in ("n", "K", "Q") if c.get(k) is not None)
                lines.append(f"family: {c['family'].upper()} ({params})")
                lines.append(f"frame: ({', '.join(c['frame'])})")
                lines.append(f"ode constant: {c['ode_constant']}")
            else:
                lines.append(f"family: {c['status']} ({c['reason']})")
            if c.get("S"):
                lines.append(f"f/f'': {c['S']['expr']}")
        for key, val in self.certificates.items():
            if isinstance(val, list) and all(isinstance(v, list) for v in val):
                lines.append(f"{key}:")
                lines.extend(f"  ({a}, {b}]" for a, b in val)
            elif isinstance(val, list):
                lines.append(f"{key}: {', '.join(map(str, val))}")
            else:
                lines.append(f"{key}: {val}")
        if self.approximate is not None:
            lines.append(f"approximate (tol {self.approximate['tolerance']}):")
            lines.extend(f"  {v}" for v in self.approximate["values"])
        return "\n".join(lines)


def root_certificates(f: RatFun) -> dict:
    out = {"numerator_real_roots": intervals(isolate_real_roots(f.num))}
    if f.den.degree > 0:
        out["denominator_real_roots"] = intervals(isolate_real_roots(f.den))
    return out
