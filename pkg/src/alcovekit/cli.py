"""Command-line front end.

Every command prints one report, either as JSON (``--format json``) or as
plain text.  Exit codes: 0 when every check passes, 1 when an identity fails
(the report carries the witness), 2 for usage or configuration errors.

Weights are comma-separated integers in fundamental-weight coordinates; write
negative ones as ``--lambda=-1,0`` so they are not read as flags.  Group
elements are words in the simple reflections (``e``, ``s0s1``, ``0,1``).
A ``--config`` JSON file supplies any flag by name (``{"lambda": "-1", ...}``)
and may also name the ``command``; explicit flags win over the file.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .affine_weyl import AffineElement, AffineWeylGroup, Window, affine_group
from .center import (
    center_check_S,
    center_check_Shat,
    context,
    end_lattice_regular,
    end_lattice_singular,
    h_identities,
    lattice_equals_sgkm,
    module_action_identity,
    pushforward,
    pushforward_check,
    row_identity,
    specialized_algebra,
)
from .gkm import (
    CosetSpace,
    GkmError,
    GkmFunction,
    Report,
    WeightSpace,
    atlas_subtorus,
    atlas_zeta,
    constant_function,
    evaluate_expansion,
    expand_in_schubert,
    gkm_check_big,
    schubert_class,
    sgkm_check_all,
    sgkm_check_small,
)
from .jantzen import (
    block_rep,
    jantzen_lhs,
    jantzen_lhs_subgeneric,
    jantzen_rhs,
    jantzen_rhs_subgeneric,
    linkage_nonzero,
    linkage_recursive,
    shapovalov_factors,
)
from .root_data import RootDatum, Weight, build_root_datum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    """Validated run parameters: the datum is built before any computation."""

    command: str
    type: str = "A1"
    l: int = 3
    format: str = "text"
    params: dict[str, Any] = field(default_factory=dict)
    datum: RootDatum | None = None

    def validate(self) -> "RunConfig":
        if self.format not in ("json", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        self.datum = build_root_datum(self.type, int(self.l))
        return self


def parse_weight(text: str | Sequence[int], rank: int) -> Weight:
    if isinstance(text, (list, tuple)):
        vals = [int(v) for v in text]
    else:
        try:
            vals = [int(v) for v in str(text).replace(" ", "").split(",") if v != ""]
        except ValueError:
            raise UsageError(f"cannot read weight {text!r}") from None
    if len(vals) != rank:
        raise UsageError(f"weight {text!r} needs {rank} coordinates")
    return tuple(vals)


def parse_labels(text: str | Sequence[int] | None) -> tuple[int, ...]:
    if text is None or text == "":
        return ()
    if isinstance(text, (list, tuple)):
        return tuple(int(v) for v in text)
    return tuple(int(v) for v in str(text).split(",") if v.strip())


def _element(G: AffineWeylGroup, text: str) -> AffineElement:
    try:
        return G.parse_element(str(text))
    except (ValueError, KeyError, IndexError):
        raise UsageError(f"cannot read group element {text!r}") from None


def _root(datum: RootDatum, text: str | None) -> tuple[int, ...]:
    if text is None:
        return datum.simple_root(0)
    beta = parse_weight(text, datum.rank)
    if beta not in datum.positive_roots:
        raise UsageError(f"{text!r} is not a positive root (simple-root coordinates)")
    return beta


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# -- commands ----------------------------------------------------------
# each returns (ok, report); ok is None for pure enumerations


def cmd_roots(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    rep = d.to_json()
    rep["rho"] = list(d.rho)
    rep["components"] = [{"label": f"{c.letter}{c.rank}", "e": c.e, "h": c.h,
                          "highest_root": list(c.highest_root), "highest_coroot": list(c.highest_coroot)}
                         for c in d.components]
    return None, rep


def cmd_xi_sc(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    reps = [{"omega": list(w), "singular": s} for w, s in d.xi_sc_enumerate()]
    return None, {"count": len(reps), "representatives": reps}


def cmd_orbit(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    G = affine_group(d)
    lam = parse_weight(a.lam, d.rank)
    omega, x = G.fold(lam)
    rep_omega, cls = G.omega_class(omega)
    stab = G.stabilizer_dot(omega)
    win = Window(lam, int(a.depth))
    below = sorted(G.up_closure(lam, win), key=lambda w: (-sum(d.weight_to_root(w)), w))
    return None, {
        "lambda": list(lam),
        "omega": list(omega),
        "x": G.word_str(x),
        "block": list(rep_omega),
        "omega_class": [list(w) for w in cls],
        "stabilizer": [G.word_str(s) for s in sorted(stab.elements, key=G.sort_key)],
        "window": win.to_json(),
        "linked_below": [list(w) for w in below],
    }


def cmd_linkage(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    lam = parse_weight(a.lam, d.rank)
    mu = parse_weight(a.mu, d.rank)
    direct = linkage_nonzero(d, lam, mu)
    rec = linkage_recursive(d, lam, mu)
    return direct == rec, {"lambda": list(lam), "mu": list(mu), "linked": direct, "recursive": rec,
                           "block_lambda": list(block_rep(d, lam)[0]), "block_mu": list(block_rep(d, mu)[0])}


def cmd_shapovalov(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    lam = parse_weight(a.lam, d.rank)
    eta = parse_weight(a.eta, d.rank)
    factors = shapovalov_factors(d, lam, eta)
    return None, {"lambda": list(lam), "eta": list(eta), "factors": [f.to_json() for f in factors]}


def cmd_jantzen_check(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    lam = parse_weight(a.lam, d.rank)
    win = Window(lam, int(a.depth))
    lhs = jantzen_lhs(d, lam, win)
    rhs = jantzen_rhs(d, lam, win)
    diff = lhs - rhs
    return lhs == rhs, {"lambda": list(lam), "lhs": lhs.to_json(), "rhs": rhs.to_json(),
                        "difference": diff.to_json()["coeffs"]}


def cmd_subgeneric_check(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    lam = parse_weight(a.lam, d.rank)
    alpha = _root(d, a.alpha)
    win = Window(lam, int(a.depth))
    lhs = jantzen_lhs_subgeneric(d, lam, alpha, win)
    rhs = jantzen_rhs_subgeneric(d, lam, alpha, win)
    return lhs == rhs, {"lambda": list(lam), "alpha": list(alpha), "lhs": lhs.to_json(), "rhs": rhs.to_json()}


def _coset_space(cfg: RunConfig, a: argparse.Namespace) -> CosetSpace:
    G = affine_group(cfg.datum, finite=bool(a.finite))
    labels = parse_labels(a.J)
    allowed = range(1, cfg.datum.rank + 1) if a.finite else range(0, cfg.datum.rank + len(cfg.datum.components))
    for j in labels:
        if j not in allowed:
            raise UsageError(f"label {j} is not a simple reflection here")
    return CosetSpace(G, labels, int(a.bound))


def _class_checks(space: CosetSpace, x: AffineElement, f: GkmFunction) -> dict:
    deg = space.length(x)
    homog = all((v.is_zero() or (v.is_homogeneous() and v.degree() == deg)) for v in f.values.values())
    support = all(space.bruhat_leq(x, y) for y, v in f.values.items() if not v.is_zero())
    diag = f(x) == space.schubert_diagonal(x)
    big = gkm_check_big(f)
    return {"homogeneous_degree": homog, "support_above_x": support, "diagonal": diag,
            "gkm": big.to_json(), "ok": homog and support and diag and big.ok}


def cmd_schubert(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    space = _coset_space(cfg, a)
    x = space.parse_point(a.x)
    cls = schubert_class(space, x).body
    checks = _class_checks(space, x, cls)
    shown = cls.specialize() if a.small else cls
    rep = {"x": space.point_id(x), "length": space.length(x), "class": shown.to_json(), "checks": checks}
    ok = checks["ok"]
    if a.small:
        sm = sgkm_check_all(shown)
        rep["sgkm"] = sm.to_json()
        ok = ok and sm.ok
    return ok, rep


def cmd_expand(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    space = _coset_space(cfg, a)
    ring = space.ring
    f = constant_function(space, 1)
    factors = [space.parse_point(t) for t in str(a.product).split("*")]
    for x in factors:
        f = f * schubert_class(space, x).body
    if a.small:
        f = f.specialize()
    coeffs = expand_in_schubert(f, small=bool(a.small))
    back = evaluate_expansion(space, coeffs, small=bool(a.small))
    ok = back.equals(f)
    return ok, {"product": [space.point_id(x) for x in factors],
                "coefficients": {space.point_id(x): ring.fmt(c)
                                 for x, c in sorted(coeffs.items(), key=lambda p: space.group.sort_key(p[0]))},
                "round_trip": ok}


def _load_values(path: str) -> dict[str, str]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read values file: {exc}") from None
    vals = doc.get("values", doc) if isinstance(doc, dict) else None
    if not isinstance(vals, dict):
        raise UsageError("values file must map point ids to polynomial strings")
    return {str(k): str(v) for k, v in vals.items()}


def cmd_gkm_check(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    space = _coset_space(cfg, a)
    raw = _load_values(a.values)
    vals = {space.parse_point(k): space.ring.parse(v) for k, v in raw.items()}
    f = GkmFunction(space, vals, bool(a.small))
    if a.small:
        rep = sgkm_check_small(f, _root(cfg.datum, a.alpha)) if a.alpha else sgkm_check_all(f)
    else:
        rep = gkm_check_big(f)
    return rep.ok, {"torus": "small" if a.small else "big", "report": rep.to_json()}


def cmd_atlas(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    G = affine_group(d)
    lam = parse_weight(a.lam, d.rank)
    weights = Window(lam, int(a.depth)).weights(d)
    out = []
    zeta = atlas_zeta(d, weights)
    sub = atlas_subtorus(d, _root(d, a.alpha), weights) if a.alpha else None
    for w in weights:
        e = zeta[w]
        row = {"weight": list(w), "omega": list(e.omega), "coset": G.word_str(e.coset)}
        if sub is not None:
            s = sub[w]
            row.update({"orbit": list(s.base), "model": s.kind, "position": list(s.position)})
        out.append(row)
    return None, {"window": Window(lam, int(a.depth)).to_json(), "entries": out}


def cmd_center_check(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    raw = _load_values(a.values)
    vals = {parse_weight(k, d.rank): v for k, v in raw.items()}
    space = WeightSpace(d, vals)
    f = GkmFunction(space, {w: space.ring.parse(v) for w, v in vals.items()}, a.torus == "S")
    rep: Report = center_check_S(f) if a.torus == "S" else center_check_Shat(f)
    return rep.ok, {"torus": a.torus, "report": rep.to_json()}


def cmd_end_lattice(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    build = end_lattice_singular if a.kind == "singular" else end_lattice_regular
    omega = parse_weight(a.omega, d.rank) if a.omega is not None else None
    lat = build(d, int(a.n), int(a.m), _root(d, a.alpha), omega)
    ok, info = lattice_equals_sgkm(d, lat) if d.rank == 1 else (None, {})
    rep = {"lattice": lat.to_json(), "sgkm": info}
    if a.specialize:
        alg = specialized_algebra(lat)
        rep["specialized"] = {"dimension": alg["dimension"],
                              "table": {f"{i},{j}": {str(k): str(v) for k, v in sorted(t.items())}
                                        for (i, j), t in sorted(alg["table"].items())}}
    return ok, rep


def _block_omega(cfg: RunConfig, a: argparse.Namespace) -> Weight:
    d = cfg.datum
    omega = parse_weight(a.omega, d.rank)
    if not d.in_closed_alcove(tuple(c + 1 for c in omega)):
        raise UsageError("omega + rho must lie in the closed fundamental alcove")
    return omega


def cmd_h_matrix(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    G = affine_group(d)
    omega = _block_omega(cfg, a)
    z = _element(G, a.z)
    ctx = context(d, omega, G.length(z))
    h = ctx.h(z)
    return None, {"omega": list(omega), "z": G.word_str(z), "order": [G.word_str(x) for x in h.order],
                  "matrix": h.fmt(ctx.ring)}


def cmd_h_identities(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    G = affine_group(d)
    omega = _block_omega(cfg, a)
    z = _element(G, a.z)
    zb = max(int(a.z_bound), G.length(z)) if a.z_bound is not None else None
    rep = h_identities(d, omega, z, zb)
    row_ok, rows = row_identity(d, omega, z, zb)
    lines = [dict(line, witness=_jsonable(line["witness"])) for line in rep.lines]
    return rep.ok and row_ok, {"omega": list(omega), "z": G.word_str(z), "identities": lines,
                               "row_identity": {"status": _status(row_ok), "columns": rows}}


def _psi(cfg: RunConfig, omega: Weight, text: str, z_bound: int) -> GkmFunction:
    ctx = context(cfg.datum, omega, z_bound)
    space = ctx.space
    f = constant_function(space, 1)
    for tok in str(text).split("*"):
        tok = tok.strip()
        if tok in ("", "1"):
            continue
        f = f * schubert_class(space, space.parse_point(tok)).body
    return f


def cmd_pushforward(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    omega = _block_omega(cfg, a)
    zb = int(a.z_bound)
    psi = _psi(cfg, omega, a.psi, zb)
    f = pushforward(d, omega, psi, zb)
    rep = pushforward_check(d, omega, psi, zb)
    ring = f.space.ring
    return rep.ok, {"omega": list(omega), "psi": a.psi,
                    "values": {f.space.point_id(z): ring.fmt(f(z)) for z in f.space.points},
                    "report": rep.to_json()}


def cmd_module_action(cfg: RunConfig, a: argparse.Namespace) -> tuple[bool | None, dict]:
    d = cfg.datum
    omega = _block_omega(cfg, a)
    zb = int(a.z_bound)
    psi = _psi(cfg, omega, a.psi, zb)
    rep = module_action_identity(d, omega, psi, zb)
    lines = [dict(line, witness=_jsonable(line["witness"])) for line in rep.lines]
    return rep.ok, {"omega": list(omega), "psi": a.psi, "identities": lines}


def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


# -- parser ------------------------------------------------------------

Command = Callable[[RunConfig, argparse.Namespace], tuple]

COMMANDS: dict[str, tuple[Command, str]] = {
    "roots": (cmd_roots, "root datum tables"),
    "xi-sc": (cmd_xi_sc, "block representatives in the closed alcove"),
    "orbit": (cmd_orbit, "fold a weight into the alcove and list its linkage class below"),
    "linkage": (cmd_linkage, "linkage test against the recursive criterion"),
    "shapovalov": (cmd_shapovalov, "Shapovalov factors on a weight space"),
    "jantzen-check": (cmd_jantzen_check, "sum formula on a window"),
    "subgeneric-check": (cmd_subgeneric_check, "subgeneric sum formula on a window"),
    "schubert": (cmd_schubert, "construct and check a Schubert class"),
    "expand": (cmd_expand, "expand a product of Schubert classes"),
    "gkm-check": (cmd_gkm_check, "GKM conditions for a tabulated function"),
    "atlas": (cmd_atlas, "zeta and subtorus atlases on a window"),
    "center-check": (cmd_center_check, "centre membership for a function on weights"),
    "end-lattice": (cmd_end_lattice, "endomorphism lattice of a rank-one truncated projective"),
    "h-matrix": (cmd_h_matrix, "translation matrix H_z"),
    "h-identities": (cmd_h_identities, "identities of the translation matrices"),
    "pushforward": (cmd_pushforward, "pushforward to the parahoric quotient"),
    "module-action": (cmd_module_action, "module-action identity"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="root type, e.g. A1, A2, B2, A1xA1")
    p.add_argument("--l", type=int, help="odd parameter l")
    p.add_argument("--format", choices=["json", "text"])
    p.add_argument("--config", help="JSON file mirroring the flags")


def _add_space(p: argparse.ArgumentParser) -> None:
    p.add_argument("--J", default="", help="parabolic labels, comma separated")
    p.add_argument("--bound", type=int, default=4, help="length bound of the window")
    p.add_argument("--finite", action="store_true", help="finite Weyl group instead of W_{l,af}")
    p.add_argument("--small", action="store_true", help="specialise delta = 0 (small torus)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alcovekit", description="Exact checks for l-dilated affine Weyl combinatorics.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        if name in ("orbit", "linkage", "shapovalov", "jantzen-check", "subgeneric-check", "atlas"):
            p.add_argument("--lambda", dest="lam", required=False)
        if name in ("orbit", "jantzen-check", "subgeneric-check", "atlas"):
            p.add_argument("--depth", type=int, default=6)
        if name == "linkage":
            p.add_argument("--mu")
        if name == "shapovalov":
            p.add_argument("--eta", help="root-lattice element in simple-root coordinates")
        if name in ("subgeneric-check", "atlas", "end-lattice", "gkm-check"):
            p.add_argument("--alpha", help="positive root in simple-root coordinates")
        if name in ("schubert", "expand", "gkm-check"):
            _add_space(p)
        if name == "schubert":
            p.add_argument("--x", default="e")
        if name == "expand":
            p.add_argument("--product", default="e", help="factors joined by '*', e.g. s1*s1")
        if name in ("gkm-check", "center-check"):
            p.add_argument("--values", help="JSON file: point id -> polynomial")
        if name == "center-check":
            p.add_argument("--torus", choices=["S", "Shat"], default="S")
        if name == "end-lattice":
            p.add_argument("--kind", choices=["singular", "regular"], default="singular")
            p.add_argument("--n", type=int, default=0)
            p.add_argument("--m", type=int, default=1)
            p.add_argument("--omega")
            p.add_argument("--specialize", action="store_true")
        if name in ("h-matrix", "h-identities", "pushforward", "module-action"):
            p.add_argument("--omega")
        if name in ("h-matrix", "h-identities"):
            p.add_argument("--z", default="e")
        if name == "h-identities":
            p.add_argument("--z-bound", type=int)
        if name in ("pushforward", "module-action"):
            p.add_argument("--psi", default="1", help="product of Schubert classes, e.g. 1 or s0*s1")
            p.add_argument("--z-bound", type=int, default=3)
    return parser


REQUIRED = {
    "orbit": ["lam"], "linkage": ["lam", "mu"], "shapovalov": ["lam", "eta"],
    "jantzen-check": ["lam"], "subgeneric-check": ["lam"], "atlas": ["lam"],
    "gkm-check": ["values"], "center-check": ["values"],
    "h-matrix": ["omega"], "h-identities": ["omega"], "pushforward": ["omega"], "module-action": ["omega"],
}


def _read_config(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError("config must be a JSON object")
    return doc


def make_config(argv: Sequence[str]) -> tuple[RunConfig, argparse.Namespace]:
    argv = list(argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    file_cfg = _read_config(known.config) if known.config else {}
    if file_cfg.get("command") and not any(a in COMMANDS for a in argv):
        argv = [str(file_cfg["command"])] + argv
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command is None:
        raise UsageError("a command is required: " + ", ".join(COMMANDS))
    dests = set(vars(ns))
    for key, val in file_cfg.items():
        if key == "command":
            continue
        dest = {"lambda": "lam"}.get(key, key.replace("-", "_"))
        if dest not in dests:
            raise UsageError(f"unknown config key {key!r} for {ns.command}")
        if getattr(ns, dest) in (None, "", False) or dest in ("type", "l", "format"):
            flag = "--" + ("lambda" if dest == "lam" else dest.replace("_", "-"))
            if flag not in argv and not any(a.startswith(flag + "=") for a in argv):
                setattr(ns, dest, val)
    for dest in REQUIRED.get(ns.command, []):
        if getattr(ns, dest) is None:
            flag = "--lambda" if dest == "lam" else "--" + dest.replace("_", "-")
            raise UsageError(f"{ns.command} needs {flag}")
    cfg = RunConfig(ns.command, ns.type or "A1", ns.l if ns.l is not None else 3, ns.format or "text",
                    {k: v for k, v in vars(ns).items() if k not in ("command", "type", "l", "format", "config")})
    return cfg.validate(), ns


def render_text(command: str, ok: bool | None, rep: dict) -> str:
    lines = []
    if ok is not None:
        lines.append(_status(ok))
    for key, val in rep.items():
        if key == "identities":
            for line in val:
                w = "" if line["witness"] is None else " " + json.dumps(line["witness"], sort_keys=True)
                lines.append(f"{line['identity']} [{line['instance']}] {line['status']}{w}")
        elif isinstance(val, dict) and set(val) == {"window", "coeffs"}:
            lines.append(f"{key}: " + " + ".join(f"{c}*e({k})" for k, c in val["coeffs"].items()) if val["coeffs"]
                         else f"{key}: 0")
        else:
            lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
    return "\n".join(lines)


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute one command; returns ``(exit code, output text)``."""
    try:
        cfg, ns = make_config(argv)
        fn, _ = COMMANDS[cfg.command]
        ok, rep = fn(cfg, ns)
    except GkmError as exc:
        return EXIT_FAIL, f"FAIL\nerror: {exc}"
    except (UsageError, ValueError) as exc:
        return EXIT_USAGE, f"error: {exc}"
    code = EXIT_OK if ok in (None, True) else EXIT_FAIL
    if cfg.format == "json":
        doc = {"command": cfg.command, "type": cfg.type, "l": cfg.l,
               "status": None if ok is None else _status(ok), "report": rep}
        return code, json.dumps(_jsonable(doc), sort_keys=True, indent=2)
    return code, render_text(cfg.command, ok, rep)


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == EXIT_USAGE else sys.stdout
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
