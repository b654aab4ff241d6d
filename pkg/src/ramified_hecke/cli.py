"""Command-line front end.

Element syntax: ``t[1,0] * s0 s1`` is ``t^(1,0)`` times ``s0 s1``; ``o<k>``
is the k-th length-zero element and ``e`` the identity.  Hecke arguments are
``theta[...]``, ``H(ELEM)``, ``C(ELEM)`` or the printed form
``(poly)*[word|k] + ...``.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .decat import DecatError, central_class, check_parity, euler_vector, ker_dim, weight_poly
from .fixtures import Fixture, get_fixture, load_config, preset_descriptions
from .hecke import HeckeElement
from .iwahori_weyl import IWElement
from .rep import CharacterError, classify, decompose, restrict_character, weight_multiplicities
from .root_datum import RootDatumError, dominant_image_gaps


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message}\n  {text}\n  {' ' * position}^")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\*)|t\[([^\]]*)\]|s(\d+)|o(\d+)|(e)\b)")


def _int_list(text: str, full: str, offset: int) -> list[int]:
    items = [x.strip() for x in text.split(",")] if text.strip() else []
    out = []
    pos = offset
    for item in items:
        if not re.fullmatch(r"[+-]?\d+", item):
            raise ParseError(f"expected an integer, got {item!r}", full, full.find(item, pos) if item else pos)
        out.append(int(item))
        pos = full.find(item, pos) + len(item)
    return out


def parse_element(fixture: Fixture, text: str) -> IWElement:
    W = fixture.system
    pos = 0
    w = W.identity
    seen = False
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError("expected t[..], s<i>, o<k>, e or '*'", text, at)
        star, trans, s_idx, o_idx, ident = m.groups()
        if trans is not None:
            vec = _int_list(trans, text, m.start(2))
            if len(vec) != fixture.ech.dim:
                raise ParseError(f"translation needs {fixture.ech.dim} coordinates", text, m.start(2))
            w = W.mul(w, W.translation(vec))
            seen = True
        elif s_idx is not None:
            i = int(s_idx)
            if i not in W.generators:
                raise ParseError(f"no simple reflection s{i}; valid: {W.indices}", text, m.start(3) - 1)
            w = W.mul(w, W.generators[i])
            seen = True
        elif o_idx is not None:
            k = int(o_idx)
            if k >= len(W.omega):
                raise ParseError(f"Omega has {len(W.omega)} elements", text, m.start(4) - 1)
            w = W.mul(w, W.omega[k])
            seen = True
        elif ident:
            seen = True
        pos = m.end()
    if not seen:
        raise ParseError("empty element", text, 0)
    return w


def format_element(fixture: Fixture, w: IWElement) -> str:
    parts = [f"t[{','.join(map(str, w.translation))}]"] if any(w.translation) or not w.finite else []
    if w.finite:
        parts.append(" ".join(f"s{i}" for i in w.finite))
    return " * ".join(parts)


def format_reduced(fixture: Fixture, w: IWElement) -> str:
    word, om = fixture.system.reduced_word(w)
    k = fixture.system.omega_index[om]
    tokens = [f"s{i}" for i in word] + ([f"o{k}"] if k else [])
    return " ".join(tokens) if tokens else "e"


def parse_weight(text: str, dim: int) -> tuple[int, ...]:
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
        offset += 1
    vec = _int_list(body, text, offset)
    if len(vec) != dim:
        raise ParseError(f"weight needs {dim} coordinates", text, 0)
    return tuple(vec)


def parse_hecke(fixture: Fixture, text: str) -> HeckeElement:
    A = fixture.hecke
    s = text.strip()
    m = re.fullmatch(r"theta\[(.*)\]", s)
    if m:
        return A.bernstein(parse_weight(m.group(1), fixture.ech.dim))
    m = re.fullmatch(r"([HC])\((.*)\)", s)
    if m:
        w = parse_element(fixture, m.group(2))
        return A.H(w) if m.group(1) == "H" else A.kl_basis(w)
    if "[" in s and "|" in s:
        try:
            return A.parse(s)
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from exc
    return A.H(parse_element(fixture, text))


def _fixture(args) -> Fixture:
    if getattr(args, "config", None):
        return load_config(args.config)
    return get_fixture(args.fixture)


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fixture", default="A1", help="preset name (see `preset list`)")
    g.add_argument("--config", help="JSON root datum config")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramified-hecke", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preset", help="list presets")
    p.add_argument("action", choices=["list"])

    p = sub.add_parser("fold", help="show the folded system")
    _add_source(p)

    p = sub.add_parser("weyl", help="Iwahori-Weyl group computations")
    p.add_argument("action", choices=["length", "reduced", "bruhat", "mincoset"])
    _add_source(p)
    p.add_argument("elements", nargs="+")

    p = sub.add_parser("hecke", help="Hecke algebra computations")
    p.add_argument("action", choices=["mult", "kl", "bernstein", "m"])
    _add_source(p)
    p.add_argument("args", nargs="+")

    p = sub.add_parser("rep", help="dual group characters")
    p.add_argument("action", choices=["weights", "restrict", "decompose", "classify"])
    _add_source(p)
    p.add_argument("weight")

    p = sub.add_parser("central", help="central classes")
    p.add_argument("action", choices=["class", "poly", "kerdim", "euler", "parity"])
    _add_source(p)
    p.add_argument("weight")

    p = sub.add_parser("verify", help="run the verification suite")
    _add_source(p)
    p.add_argument("--max-length", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    return parser


def _need(args, n: int, what: str) -> None:
    if len(args) != n:
        raise ParseError(f"expected {n} {what}", " ".join(args), 0)


def _cmd_fold(f: Fixture) -> None:
    ech = f.ech
    print(f"fixture: {f.name}")
    print(f"free rank: {ech.free_rank}")
    print(f"torsion: {list(ech.torsion)}")
    print(f"type: {ech.cartan_type()}")
    print(f"dual type: {ech.dual_cartan_type()}")
    print(f"two_rho: {list(ech.two_rho)}")
    for i, p in enumerate(ech.simple, 1):
        print(f"simple {i}: coroot {list(p.coroot)} root {list(p.root)}")
    n = f.datum.rank
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        print(f"project e{j + 1}: {list(ech.project(e))}")
    print(f"positive roots: {len(ech.positive)}")
    print(f"omega: {len(f.system.omega)}")
    if ech.rank == ech.free_rank:
        gaps = dominant_image_gaps(f.unfolded, ech, 12)
        shown = " ".join(f"[{','.join(map(str, g))}]" for g in gaps) if gaps else "none"
        print(f"dominant classes missed by dominant lifts (2rho <= 12): {shown}")


def _cmd_weyl(f: Fixture, action: str, elems: list[str]) -> None:
    W = f.system
    if action == "bruhat":
        _need(elems, 2, "elements")
        a, b = (parse_element(f, e) for e in elems)
        print("true" if W.bruhat_leq(a, b) else "false")
        return
    _need(elems, 1, "element")
    w = parse_element(f, elems[0])
    if action == "length":
        print(W.length(w))
    elif action == "reduced":
        print(format_reduced(f, w))
    else:
        print(format_element(f, W.min_coset_rep(w)))


def _cmd_hecke(f: Fixture, action: str, args: list[str]) -> None:
    A = f.hecke
    if action == "mult":
        if len(args) < 2:
            raise ParseError("expected at least 2 factors", " ".join(args), 0)
        out = parse_hecke(f, args[0])
        for a in args[1:]:
            out = A.mult(out, parse_hecke(f, a))
        print(A.format(out))
    elif action == "kl":
        _need(args, 1, "element")
        print(A.format(A.kl_basis(parse_element(f, args[0]))))
    elif action == "bernstein":
        _need(args, 1, "weight")
        a = args[0].strip()
        m = re.fullmatch(r"theta\[(.*)\]", a)
        print(A.format(A.bernstein(parse_weight(m.group(1) if m else a, f.ech.dim))))
    else:
        _need(args, 1, "Hecke element")
        print(A.m(parse_hecke(f, args[0])))


def _cmd_rep(f: Fixture, action: str, text: str) -> None:
    if action == "classify":
        print(classify(f.ech, parse_weight(text, f.ech.dim)))
        return
    lam = parse_weight(text, f.datum.rank)
    ch = weight_multiplicities(f.unfolded, lam)
    if action == "weights":
        print(ch.format())
        return
    res = restrict_character(f.ech, ch)
    if action == "restrict":
        print(res.format())
    else:
        for mu, k in decompose(res):
            print(f"{','.join(map(str, mu))} : {k}")


def _cmd_central(f: Fixture, action: str, text: str) -> None:
    lam = parse_weight(text, f.datum.rank)
    if action == "class":
        print(f.hecke.format(central_class(f, lam).element))
    elif action == "poly":
        print(weight_poly(f, lam))
    elif action == "kerdim":
        print(ker_dim(f, lam))
    elif action == "parity":
        print("true" if check_parity(f, lam) else "false")
    else:
        for mu, k in sorted(euler_vector(f, lam).items()):
            print(f"{','.join(map(str, mu))} : {k}")


def _cmd_verify(args) -> int:
    from .verify import run_fixture

    try:
        f = _fixture(args)
    except Exception as exc:
        report = [
            {
                "check_id": "construction",
                "paper_ref": "fixture builds and passes structural checks",
                "status": "fail",
                "counterexample": f"{type(exc).__name__}: {exc}",
                "elapsed_ms": 0,
            }
        ]
    else:
        report = run_fixture(f, args.max_length, args.seed)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        width = max(len(e["check_id"]) for e in report)
        for e in report:
            line = f"{e['check_id']:<{width}}  {e['status'].upper():<4}  {e['elapsed_ms']:>9.1f} ms"
            if "counterexample" in e:
                line += f"  {e['counterexample']}"
            print(line)
        n_fail = sum(e["status"] != "pass" for e in report)
        print(f"{len(report) - n_fail}/{len(report)} checks passed")
    return 0 if all(e["status"] == "pass" for e in report) else 1


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "preset":
            for name, desc in preset_descriptions().items():
                print(f"{name:<8} {desc}")
            return 0
        if args.command == "verify":
            return _cmd_verify(args)
        f = _fixture(args)
        if args.command == "fold":
            _cmd_fold(f)
        elif args.command == "weyl":
            _cmd_weyl(f, args.action, args.elements)
        elif args.command == "hecke":
            _cmd_hecke(f, args.action, args.args)
        elif args.command == "rep":
            _cmd_rep(f, args.action, args.weight)
        elif args.command == "central":
            _cmd_central(f, args.action, args.weight)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (RootDatumError, CharacterError, DecatError, KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
