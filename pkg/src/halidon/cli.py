"""Command-line surface: every operation as a subcommand with JSON output.

Successful commands print their payload as JSON on stdout and exit 0; domain
errors print {"status": "error", "diagnostics": [...]} and exit 1; usage
errors exit 2.  omega and m^-1 are never required: when --w is omitted the
smallest primitive root for (n, m) is computed internally.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import audits, group_ring, maschke, ring_core, rings, transform
from .errors import HalidonError
from .group_ring import GroupRingElement, Spectrum
from .maschke import GroupTable
from .rings import HalidonRing


@dataclass
class CommandResult:
    status: str
    payload: object = None
    diagnostics: list[str] = field(default_factory=list)
    exit_code: int = 0
    pretty: bool = False


def _int_vector(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def _resolve_ring(args) -> HalidonRing:
    n, m = args.n, args.m
    if args.w is not None:
        return HalidonRing(n, m, args.w)
    roots = rings._roots_for_index(n, m, ring_core.factorize(n))
    if not roots:
        raise HalidonError(f"Z_{n} has no primitive {m}-th root of unity")
    return HalidonRing(n, m, roots[0])


def _add_ring_flags(sub, with_mode: str | None = None):
    sub.add_argument("--n", type=int, required=True, help="modulus")
    sub.add_argument("--m", type=int, required=True, help="index")
    sub.add_argument("--w", type=int, default=None, help="primitive m-th root (computed when omitted)")
    if with_mode:
        sub.add_argument("--mode", choices=with_mode.split(","), default=with_mode.split(",")[0])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    parser = argparse.ArgumentParser(
        prog="halidon",
        description="Halidon-ring computations on Z_n with JSON output.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    p = add("detect", "maximal index and certifying roots of Z_n")
    p.add_argument("modulus", type=int)
    p.add_argument("--witness-only", action="store_true", help="return only the smallest root")

    for name, help_text in (
        ("psi", "halidon function of n"),
        ("profile", "factorization, phi, carmichael and psi of n"),
        ("units", "units of Z_n with inverses"),
        ("idempotents", "idempotents of Z_n"),
        ("involutions", "involutions of Z_n"),
        ("aut-quadratic", "automorphism count of Z_n[X]/(X^2-1), odd n"),
    ):
        add(name, help_text).add_argument("modulus", type=int)

    add("rigidity", "whether m! = 2^k phi(m) for some k >= 1").add_argument(
        "index", type=int
    )

    p = add("grp-lambda", "spectrum of a group-ring element")
    _add_ring_flags(p)
    p.add_argument("coeffs", type=_int_vector)

    p = add("grp-reconstruct", "element with the given spectrum")
    _add_ring_flags(p)
    p.add_argument("values", type=_int_vector)

    p = add("grp-inverse", "inverse of a group-ring element")
    _add_ring_flags(p)
    p.add_argument("coeffs", type=_int_vector)

    p = add("grp-idempotent", "idempotent from an idempotent spectrum")
    _add_ring_flags(p)
    p.add_argument("values", type=_int_vector)

    p = add("grp-census", "unit and idempotent counts of Z_n[C_m]")
    _add_ring_flags(p, with_mode="formula,enumerate")

    p = add("dft", "number-theoretic Fourier transform")
    _add_ring_flags(p)
    p.add_argument("coeffs", type=_int_vector)

    p = add("idft", "inverse transform")
    _add_ring_flags(p)
    p.add_argument("values", type=_int_vector)

    p = add("convolve", "cyclic convolution of two vectors")
    _add_ring_flags(p, with_mode="direct,spectral")
    p.add_argument("f", type=_int_vector)
    p.add_argument("g", type=_int_vector)

    p = add("circulant", "circulant matrix of a vector (spectrally verified)")
    _add_ring_flags(p)
    p.add_argument("u", type=_int_vector)

    p = add("bilinear", "the form <x, y>_u = x C_u y^T")
    _add_ring_flags(p)
    p.add_argument("u", type=_int_vector)
    p.add_argument("x", type=_int_vector)
    p.add_argument("y", type=_int_vector)

    p = add("gram", "Gram matrix of the form on the eigenvector basis")
    _add_ring_flags(p)
    p.add_argument("u", type=_int_vector)

    p = add("nondegenerate", "whether the form <.,.>_u is nondegenerate")
    _add_ring_flags(p)
    p.add_argument("u", type=_int_vector)

    p = add("maschke-cyclic", "the m orthogonal projections of Z_n^m")
    _add_ring_flags(p)

    p = add("maschke-average", "average a projection over a group table")
    p.add_argument("--n", type=int, required=True, help="modulus")
    p.add_argument("--table", required=True, help="group table JSON file {order, identity, table}")
    p.add_argument("--phi", required=True, help="projection matrix JSON file (nested arrays)")

    p = add("audit", "run the invariant audits over a range of n")
    p.add_argument("--range", dest="range_", default="2:200", metavar="LO:HI")

    return parser


def _execute(args) -> CommandResult:
    cmd = args.command
    if cmd == "detect":
        m, roots = rings.detect(args.modulus, complete=not args.witness_only)
        diagnostics = ["witness-only: root list truncated"] if args.witness_only else []
        return CommandResult("ok", {"n": args.modulus, "m": m, "roots": roots}, diagnostics)
    if cmd == "psi":
        return CommandResult("ok", {"n": args.modulus, "psi": ring_core.halidon_psi(args.modulus)})
    if cmd == "profile":
        prof = ring_core.profile(args.modulus)
        return CommandResult(
            "ok",
            {
                "n": prof.n,
                "factors": [list(pe) for pe in prof.factors],
                "phi": prof.phi,
                "carmichael": prof.carmichael,
                "psi": prof.psi,
            },
        )
    if cmd == "units":
        pairs = ring_core.units(args.modulus)
        return CommandResult("ok", {"n": args.modulus, "count": len(pairs), "units": [list(p) for p in pairs]})
    if cmd == "idempotents":
        vals = ring_core.idempotents(args.modulus)
        return CommandResult("ok", {"n": args.modulus, "count": len(vals), "values": vals})
    if cmd == "involutions":
        vals = ring_core.involutions(args.modulus)
        return CommandResult("ok", {"n": args.modulus, "count": len(vals), "values": vals})
    if cmd == "aut-quadratic":
        return CommandResult("ok", {"n": args.modulus, "automorphisms": rings.aut_quadratic(args.modulus)})
    if cmd == "rigidity":
        return CommandResult("ok", {"m": args.index, "rigid": rings.rigidity_check(args.index)})

    if cmd == "grp-lambda":
        ring = _resolve_ring(args)
        u = GroupRingElement(ring, tuple(args.coeffs))
        return CommandResult("ok", {"lambda": list(u.spectrum().values)})
    if cmd == "grp-reconstruct":
        ring = _resolve_ring(args)
        el = Spectrum(ring, tuple(args.values)).to_element()
        return CommandResult("ok", {"coeffs": list(el.coeffs)})
    if cmd == "grp-inverse":
        ring = _resolve_ring(args)
        u = GroupRingElement(ring, tuple(args.coeffs))
        return CommandResult("ok", {"inverse": list(u.inverse().coeffs)})
    if cmd == "grp-idempotent":
        ring = _resolve_ring(args)
        el = group_ring.idempotent_from_spectrum(Spectrum(ring, tuple(args.values)))
        return CommandResult("ok", {"idempotent": list(el.coeffs)})
    if cmd == "grp-census":
        ring = _resolve_ring(args)
        units_count, idem_count = group_ring.census(ring, mode=args.mode)
        return CommandResult(
            "ok", {"mode": args.mode, "units": units_count, "idempotents": idem_count}
        )

    if cmd == "dft":
        return CommandResult("ok", {"F": transform.dft(_resolve_ring(args), args.coeffs)})
    if cmd == "idft":
        return CommandResult("ok", {"f": transform.idft(_resolve_ring(args), args.values)})
    if cmd == "convolve":
        ring = _resolve_ring(args)
        return CommandResult("ok", {"h": transform.convolve(ring, args.f, args.g, mode=args.mode)})
    if cmd == "circulant":
        return CommandResult("ok", {"matrix": transform.circulant(_resolve_ring(args), args.u)})
    if cmd == "bilinear":
        ring = _resolve_ring(args)
        return CommandResult("ok", {"value": transform.bilinear_eval(ring, args.u, args.x, args.y)})
    if cmd == "gram":
        return CommandResult("ok", {"matrix": transform.gram_s_basis(_resolve_ring(args), args.u)})
    if cmd == "nondegenerate":
        ring = _resolve_ring(args)
        return CommandResult("ok", {"nondegenerate": transform.is_nondegenerate(ring, args.u)})

    if cmd == "maschke-cyclic":
        ring = _resolve_ring(args)
        mats = [[list(row) for row in p.matrix] for p in maschke.cyclic_decomposition(ring)]
        return CommandResult("ok", {"projections": mats})
    if cmd == "maschke-average":
        with open(args.table) as fh:
            table = GroupTable.from_dict(json.load(fh))
        with open(args.phi) as fh:
            phi = json.load(fh)
        rep = maschke.permutation_rep(table, args.n)
        tau = maschke.average_projection(rep, phi)
        return CommandResult("ok", {"tau": [list(row) for row in tau.matrix]})

    if cmd == "audit":
        lo, _, hi = args.range_.partition(":")
        lo, hi = int(lo), int(hi or lo)
        structural = audits.structural_audit(lo, hi)
        conjecture = audits.conjecture_audit(lo, hi)
        diagnostics = [
            f"conjecture counterexample at n={item['n']}"
            for item in conjecture["counterexamples"]
        ]
        return CommandResult(
            "ok",
            {"range": [lo, hi], "structural": structural, "conjecture": conjecture},
            diagnostics,
        )
    raise AssertionError(f"unhandled command {cmd!r}")


def run(argv: list[str]) -> CommandResult:
    """Parse and execute argv; domain errors come back as error results."""
    args = build_parser().parse_args(argv)
    try:
        result = _execute(args)
    except (HalidonError, ValueError, OSError, json.JSONDecodeError) as exc:
        result = CommandResult("error", None, [str(exc)], exit_code=1)
    result.pretty = getattr(args, "pretty", False)
    return result


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    indent = 2 if result.pretty else None
    if result.status == "ok":
        print(json.dumps(result.payload, indent=indent))
    else:
        print(
            json.dumps(
                {"status": "error", "diagnostics": result.diagnostics}, indent=indent
            )
        )
    for note in result.diagnostics:
        print(note, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
