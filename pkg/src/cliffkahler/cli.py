"""Command-line front end.

Subcommands: classify, ideal, project, recover, verify, kahler.  Results go
to standard output (or ``--output``), errors to standard error with a
nonzero exit status.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .blades import Signature, blade_name
from .errors import CliffordError, UnsupportedSignature
from .ideals import (IdempotentReport, build_idempotent, classify, involution_count,
                     verify_idempotent)
from .textio import (FORMAT_VERSION, multivector_to_json, parse_blade_list,
                     parse_multivector, render_multivector)
from .unitary import (induce_idempotent, kahler_polynomial, rational_kahler_polynomial,
                      recover_by_projection, recover_structure)


@dataclass
class Report:
    command: str
    signature: tuple[int, int] | None
    payload: dict
    lines: list[str] = field(default_factory=list, compare=False, repr=False)
    format_version: int = FORMAT_VERSION

    def to_json(self) -> dict:
        return {
            "format_version": self.format_version,
            "command": self.command,
            "signature": list(self.signature) if self.signature else None,
            "payload": self.payload,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Report":
        sig = data["signature"]
        return cls(command=data["command"], signature=tuple(sig) if sig else None,
                   payload=data["payload"], format_version=data["format_version"])

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"
        return "\n".join(self.lines) + "\n"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _factorization(generators) -> str:
    if not generators:
        return "1"
    return " ".join(f"(1 + {blade_name(g)})/2" for g in generators)


def _idempotent_payload(rep: IdempotentReport) -> dict:
    return {
        "f": multivector_to_json(rep.f),
        "generators": [blade_name(g) for g in rep.generators],
        "k": rep.k,
        "is_idempotent": rep.is_idempotent,
        "is_primitive": rep.is_primitive,
        "matrix_type": str(rep.matrix_type),
        "ideal_dim": rep.ideal_dim,
        "division_type": rep.division_type,
        "division_basis": [{"label": lab, "element": multivector_to_json(x)}
                           for lab, x in zip(rep.division_labels(), rep.division_basis)],
        "ideal_basis": [{"label": lab, "element": multivector_to_json(x)}
                        for lab, x in zip(rep.basis_labels(), rep.ideal_basis)],
    }


def _idempotent_lines(rep: IdempotentReport) -> list[str]:
    lines = [f"f = {render_multivector(rep.f)}"]
    if rep.generators:
        lines.append(f"factorization: {_factorization(rep.generators)}")
    lines += [
        f"k: {rep.k}",
        f"idempotent: {_yes(rep.is_idempotent)}",
        f"primitive: {_yes(rep.is_primitive)}",
        f"matrix_type: {rep.matrix_type}",
        f"ideal_dim: {rep.ideal_dim}",
        f"division_type: {rep.division_type or '-'}",
        f"division_basis: {', '.join(rep.division_labels()) or '-'}",
        "basis:",
    ]
    for lab, x in zip(rep.basis_labels(), rep.ideal_basis):
        lines.append(f"{lab} = {render_multivector(x)}")
    return lines


def cmd_classify(sig: Signature) -> Report:
    mt = classify(sig)
    k = involution_count(sig)
    payload = {"matrix_type": str(mt), "base": mt.base, "size": mt.size,
               "k": k, "ideal_dim": mt.minimal_ideal_dim}
    return Report("classify", (sig.p, sig.q), payload,
                  [f"{mt}, k={k}, ideal_dim={mt.minimal_ideal_dim}"])


def cmd_ideal(sig: Signature, structure: str | None = None,
              generators: str | None = None) -> Report:
    if (structure is None) == (generators is None):
        raise ValueError("give exactly one of structure or generators")
    if structure is not None:
        if not (structure.startswith("u") and structure[1:].isdigit()):
            raise UnsupportedSignature(f"unknown structure {structure!r}; use uN")
        rep = induce_idempotent(int(structure[1:]), sig)
        source = structure
    else:
        gens = parse_blade_list(generators, sig)
        rep = verify_idempotent(sig, build_idempotent(sig, gens), gens)
        source = ",".join(blade_name(g) for g in gens)
    payload = {"source": source, **_idempotent_payload(rep)}
    lines = [f"signature: {sig.p},{sig.q}", f"source: {source}"] + _idempotent_lines(rep)
    return Report("ideal", (sig.p, sig.q), payload, lines)


def cmd_project(sig: Signature) -> Report:
    d = recover_by_projection(sig)
    rep = d.report
    payload = {
        "m": d.m,
        "pairs": [list(pq) for pq in d.pairs],
        "subalgebra": list(d.subalgebra.members),
        "f_tilde": multivector_to_json(d.f_tilde),
        "extra_generators": [blade_name(g) for g in d.extra_generators],
        "e": multivector_to_json(d.e),
        "h": multivector_to_json(d.h),
        "omega_tilde": multivector_to_json(d.omega_tilde),
        "k": rep.k,
        "is_idempotent": rep.is_idempotent,
        "is_primitive": rep.is_primitive,
        "ideal_dim": rep.ideal_dim,
        "splitting_holds": d.splitting_holds,
        "restriction_is_kahler": d.restriction_is_kahler,
    }
    lines = [
        f"signature: {sig.p},{sig.q}",
        f"m: {d.m}",
        "pairs: " + " ".join(f"({a},{b})" for a, b in d.pairs),
        "subalgebra: {" + ",".join(map(str, d.subalgebra.members)) + "}",
        f"f_tilde = {render_multivector(d.f_tilde)}",
        "extra_generators: " + (", ".join(blade_name(g) for g in d.extra_generators) or "-"),
        f"e = {render_multivector(d.e)}",
        f"h = {render_multivector(d.h)}",
        f"omega_tilde = {render_multivector(d.omega_tilde)}",
        f"k: {rep.k}",
        f"idempotent: {_yes(rep.is_idempotent)}",
        f"primitive: {_yes(rep.is_primitive)}",
        f"ideal_dim: {rep.ideal_dim}",
        f"restriction sigma*|A(f_tilde) = P(omega): {_yes(d.restriction_is_kahler)}",
        f"splitting sigma*(h) = PQ(omega_tilde) ^ sigma*(e): {_yes(d.splitting_holds)}",
    ]
    return Report("project", (sig.p, sig.q), payload, lines)


def _matrix_rows(M) -> list[list[int]]:
    return [[int(v) if v.denominator == 1 else str(v) for v in row] for row in M.entries]


def cmd_recover(sig: Signature, text: str) -> Report:
    f = parse_multivector(text, sig)
    st = recover_structure(sig, f)
    rows = _matrix_rows(st.J)
    payload = {"n": st.n, "omega": multivector_to_json(st.omega), "J": rows}
    lines = [f"signature: {sig.p},{sig.q}", f"n: {st.n}",
             f"omega = {render_multivector(st.omega)}", "J ="]
    width = max(len(str(v)) for row in rows for v in row)
    lines += ["  " + " ".join(str(v).rjust(width) for v in row) for row in rows]
    return Report("recover", (sig.p, sig.q), payload, lines)


def cmd_verify(sig: Signature, text: str) -> Report:
    rep = verify_idempotent(sig, parse_multivector(text, sig))
    lines = [f"signature: {sig.p},{sig.q}"] + _idempotent_lines(rep)
    return Report("verify", (sig.p, sig.q), _idempotent_payload(rep), lines)


def cmd_kahler(n: int, rational: bool = False) -> Report:
    poly = rational_kahler_polynomial(n) if rational else kahler_polynomial(n)
    name = "PQ(omega)" if rational else "P(omega)"
    payload = {"n": n, "rational": rational, "polynomial": multivector_to_json(poly)}
    return Report("kahler", None, payload,
                  [f"n: {n}", f"{name} = {render_multivector(poly)}"])


def _signature(text: str) -> Signature:
    try:
        p, q = (int(s) for s in text.split(","))
        return Signature(p, q)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad signature {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffkahler",
        description="Exact primitive idempotents and U(n)-structures in real Clifford algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", metavar="FILE")
    sig_arg = argparse.ArgumentParser(add_help=False)
    sig_arg.add_argument("--signature", type=_signature, required=True, metavar="P,Q")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common, sig_arg],
                   help="matrix-algebra type, k and minimal ideal dimension")
    p_ideal = sub.add_parser("ideal", parents=[common, sig_arg],
                             help="build and verify a primitive idempotent and its ideal basis")
    src = p_ideal.add_mutually_exclusive_group(required=True)
    src.add_argument("--structure", metavar="uN")
    src.add_argument("--generators", metavar="LIST")
    sub.add_parser("project", parents=[common, sig_arg],
                   help="recover a U(m)-structure by projection")
    for name, help_text in (("recover", "recover omega and J from an idempotent file"),
                            ("verify", "verify an idempotent read from a file")):
        sp = sub.add_parser(name, parents=[common, sig_arg], help=help_text)
        sp.add_argument("--idempotent", required=True, metavar="FILE")
    p_k = sub.add_parser("kahler", parents=[common], help="print P(omega) or PQ(omega)")
    p_k.add_argument("--n", type=int, required=True)
    p_k.add_argument("--rational", action="store_true")
    return parser


def run(args: argparse.Namespace) -> Report:
    if args.command == "classify":
        return cmd_classify(args.signature)
    if args.command == "ideal":
        return cmd_ideal(args.signature, args.structure, args.generators)
    if args.command == "project":
        return cmd_project(args.signature)
    if args.command in ("recover", "verify"):
        text = Path(args.idempotent).read_text(encoding="utf-8")
        fn = cmd_recover if args.command == "recover" else cmd_verify
        return fn(args.signature, text)
    if args.command == "kahler":
        if args.n < 1:
            raise UnsupportedSignature("--n must be at least 1")
        return cmd_kahler(args.n, args.rational)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except (CliffordError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    out = report.render(args.format)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
