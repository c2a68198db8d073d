#!/usr/bin/env python3
"""
gca-verify - command line front end
===================================

Runs one check per invocation and writes its structured report (JSON) to
stdout or to ``--out``. Status lines go to stderr.

Exit codes:
    0  the check verified (or the verdict matched its closed form)
    1  a mathematical check was falsified; the report carries the counterexample
    2  usage error (bad flags, bad literals, violated hypotheses)

Examples:
    python cli.py tensor-irr --family mixed --l1 2 --eta1 0 --s1 1 --l2 3 --eta2 0 --s2 1 --M 4 --D 3
    python cli.py vandermonde --vals 1,2,3,4
    python cli.py classify --A "mixed:2,0,1;3,0,1" --B "mixed:2,1,1;3,0,1"
    python cli.py closure --family mixed --l1 2 --s1 1 --l2 2 --s2 1 --seed-exprs "Y @ 1" --Dcap 4
"""

import logging
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import click

import analysis
from closure import generate, span_of
from errors import ConfigError, GCAError, ModuleSpecError, ReductionError
from exactnum import UniPoly, Vector, format_scalar, scalar
from expression_parser import Alphabet, display, format_vector, parse_expr, parse_vector
from freemod import ModuleFamily, ModuleSpec
from reports import Report, load_config, vector_witness, write_report
from settings import SETTINGS, configure_logging
from tensormod import TensorSpec

logger = logging.getLogger(__name__)

# ============================================================================
# SPEC CONSTRUCTION
# ============================================================================

MODULE_FAMILIES = {family.value: family for family in ModuleFamily}
TENSOR_SHAPES = {
    "mixed": (ModuleFamily.TYPE_I, ModuleFamily.TYPE_II),
    "typeI": (ModuleFamily.TYPE_I, ModuleFamily.TYPE_I),
    "typeII": (ModuleFamily.TYPE_II, ModuleFamily.TYPE_II),
    "witt": (ModuleFamily.WITT_OMEGA, ModuleFamily.WITT_OMEGA),
    "hvir": (ModuleFamily.HVIR_OMEGA, ModuleFamily.HVIR_OMEGA),
}
POLY_VARIABLE = {
    ModuleFamily.TYPE_I: "X",
    ModuleFamily.TYPE_II: "S",
    ModuleFamily.TYPE_III: "P",
}


def parse_poly(text: str, variable: str) -> UniPoly:
    """Polynomial in one variable, written in the expression language."""
    alphabet = Alphabet((variable,), {variable: 0})
    v = parse_expr(text, alphabet).lower(alphabet)
    degree = max((mono[0] for mono in v.terms), default=0)
    return UniPoly([v.coeff((k,)) for k in range(degree + 1)])


def build_module(family: ModuleFamily, lam: Optional[str], eta: Optional[str] = None,
                 sigma: Optional[str] = None, delta: Optional[str] = None,
                 alpha: Optional[str] = None, beta: Optional[str] = None) -> ModuleSpec:
    if lam is None:
        raise ModuleSpecError(f"{family.value} needs λ")
    variable = POLY_VARIABLE.get(family)
    if family in (ModuleFamily.TYPE_I, ModuleFamily.TYPE_II):
        if sigma is None:
            raise ModuleSpecError(f"{family.value} needs σ")
        return ModuleSpec(family, lam, eta=eta or "0", sigma=parse_poly(sigma, variable))
    if family is ModuleFamily.TYPE_III:
        if delta is None:
            raise ModuleSpecError("TypeIII needs δ")
        return ModuleSpec.type_iii(lam, parse_poly(delta, variable))
    if family is ModuleFamily.WITT_OMEGA:
        return ModuleSpec.witt(lam, alpha or "0")
    return ModuleSpec.hvir(lam, alpha or "0", beta or "0")


def build_spec(opts: Dict[str, Any]):
    """ModuleSpec or TensorSpec from the shared family flags."""
    family = opts["family"]
    if family in MODULE_FAMILIES:
        return build_module(MODULE_FAMILIES[family], opts.get("lam"), opts.get("eta"), opts.get("sigma"),
                            opts.get("delta"), opts.get("alpha"), opts.get("beta"))
    left_family, right_family = TENSOR_SHAPES[family]
    left = build_module(left_family, opts.get("l1"), opts.get("eta1"), opts.get("s1"),
                        None, opts.get("alpha1"), opts.get("beta1"))
    right = build_module(right_family, opts.get("l2"), opts.get("eta2"), opts.get("s2"),
                         None, opts.get("alpha2"), opts.get("beta2"))
    return TensorSpec(left, right)


_FACTOR_FIELDS = {
    ModuleFamily.TYPE_I: ("lam", "eta", "sigma"),
    ModuleFamily.TYPE_II: ("lam", "eta", "sigma"),
    ModuleFamily.WITT_OMEGA: ("lam", "alpha"),
    ModuleFamily.HVIR_OMEGA: ("lam", "alpha", "beta"),
}


def parse_tensor_literal(text: str) -> TensorSpec:
    """``mixed:2,0,1;3,0,1`` -> TensorSpec (factor fields follow the family)."""
    shape, sep, body = text.partition(":")
    if not sep or shape not in TENSOR_SHAPES:
        raise ModuleSpecError(f"expected <shape>:<left>;<right> with shape in {sorted(TENSOR_SHAPES)}, got {text!r}")
    parts = body.split(";")
    if len(parts) != 2:
        raise ModuleSpecError(f"expected two factors separated by ';', got {body!r}")
    factors = []
    for family, part in zip(TENSOR_SHAPES[shape], parts):
        values = [value.strip() for value in part.split(",")]
        names = _FACTOR_FIELDS[family]
        if len(values) != len(names):
            raise ModuleSpecError(f"{family.value} factor needs {len(names)} values ({', '.join(names)}), got {part!r}")
        fields = dict(zip(names, values))
        factors.append(build_module(family, **fields))
    return TensorSpec(*factors)


# ============================================================================
# SHARED OPTIONS
# ============================================================================

_NOT_PARAMS = {"config", "out", "verbose"}


def _load_config(ctx: click.Context, param: click.Parameter, value: Optional[str]):
    if value is None:
        return value
    try:
        data = load_config(value)
    except ConfigError as exc:
        raise click.BadParameter(str(exc), ctx=ctx, param=param)
    flags = {opt.lstrip("-"): p.name for p in ctx.command.params for opt in p.opts}
    unknown = sorted(set(data) - set(flags))
    if unknown:
        raise click.BadParameter(f"unknown keys for {ctx.command.name}: {', '.join(unknown)}", ctx=ctx, param=param)
    ctx.default_map = {flags[key]: value for key, value in data.items()}
    return value


def common_options(func: Callable) -> Callable:
    func = click.option("--verbose", is_flag=True, help="Log at DEBUG level.")(func)
    func = click.option("--out", type=click.Path(dir_okay=False, writable=True),
                        help="Write the JSON report here instead of stdout.")(func)
    func = click.option("--config", type=click.Path(exists=True, dir_okay=False), is_eager=True,
                        expose_value=False, callback=_load_config,
                        help="JSON file whose keys mirror this command's flags.")(func)
    return func


def spec_options(func: Callable) -> Callable:
    """Family flags shared by every command that takes one module or tensor."""
    choices = list(MODULE_FAMILIES) + list(TENSOR_SHAPES)
    flags: List[Tuple[str, str]] = [
        ("--beta2", "β of the right factor (hvir)"),
        ("--alpha2", "α of the right factor (witt/hvir)"),
        ("--s2", "σ of the right factor"),
        ("--eta2", "η of the right factor"),
        ("--l2", "λ of the right factor"),
        ("--beta1", "β of the left factor (hvir)"),
        ("--alpha1", "α of the left factor (witt/hvir)"),
        ("--s1", "σ of the left factor"),
        ("--eta1", "η of the left factor"),
        ("--l1", "λ of the left factor"),
        ("--beta", "β (HVirOmega)"),
        ("--alpha", "α (WittOmega/HVirOmega)"),
        ("--delta", "δ polynomial in P (TypeIII)"),
        ("--sigma", "σ polynomial in X (TypeI) or S (TypeII)"),
        ("--eta", "η (TypeI/TypeII), default 0"),
        ("--lam", "λ of a single module"),
    ]
    for flag, text in flags:
        func = click.option(flag, default=None, help=text)(func)
    func = click.option("--family", required=True, type=click.Choice(choices),
                        help="Module family or tensor shape.")(func)
    return func


def _params(ctx: click.Context) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    for p in ctx.command.params:
        if p.name in _NOT_PARAMS or not p.opts:
            continue
        value = ctx.params.get(p.name)
        if value is None or value == () or value is False:
            continue
        params[p.opts[0].lstrip("-")] = list(value) if isinstance(value, tuple) else value
    return params


def _execute(ctx: click.Context, body: Callable[[], Tuple[Report, bool]]) -> None:
    """Run one check: status lines, error mapping, report output, exit code."""
    configure_logging("DEBUG" if ctx.params.get("verbose") else SETTINGS.log_level)
    click.echo(f"🔍 Running {ctx.command.name}...", err=True)
    start = time.perf_counter()
    try:
        report, ok = body()
    except GCAError as exc:
        click.echo(f"⚠️  {exc}", err=True)
        ctx.exit(2)
    report.wall_ms = int((time.perf_counter() - start) * 1000)
    out = ctx.params.get("out")
    text = write_report(report, out)
    if not out:
        click.echo(text, nl=False)
    if ok:
        click.echo(f"✅ {ctx.command.name}: {report.verdict}", err=True)
    else:
        click.echo(f"❌ {ctx.command.name}: {report.verdict}", err=True)
    ctx.exit(0 if ok else 1)


def _parse_vectors(exprs, spec) -> List[Vector]:
    return [parse_vector(expr, spec) for expr in exprs]


# ============================================================================
# COMMANDS
# ============================================================================

@click.group()
@click.version_option("1.0.0", prog_name="gca-verify")
def cli():
    """Exact checks on modules over the planar Galilean conformal algebra."""


@cli.command()
@spec_options
@click.option("--index-bound", default=3, show_default=True, type=click.IntRange(min=0))
@click.option("--degree-bound", default=3, show_default=True, type=click.IntRange(min=0))
@common_options
@click.pass_context
def axioms(ctx, **opts):
    """Check x(y v) - y(x v) = [x, y] v on a bounded grid."""
    def body():
        spec = build_spec(opts)
        result = analysis.verify_axioms(spec, opts["index_bound"], opts["degree_bound"])
        report = Report("axioms", _params(ctx), "verified" if result else "falsified",
                        dims={"checked": result.checked})
        if not result:
            cx = result.counterexample
            report.counterexample = {
                "x": str(cx.x), "y": str(cx.y), "monomial": list(cx.monomial),
                "difference": vector_witness(cx.difference, spec),
            }
        return report, result.holds
    _execute(ctx, body)


@cli.command("rank-one")
@spec_options
@click.option("--M", "m_range", default=4, show_default=True, type=click.IntRange(min=0))
@click.option("--Dcap", "dcap", default=6, show_default=True, type=click.IntRange(min=1))
@common_options
@click.pass_context
def rank_one(ctx, **opts):
    """Irreducibility evidence or a reducibility witness for one module."""
    def body():
        spec = build_spec(opts)
        if not isinstance(spec, ModuleSpec):
            raise ModuleSpecError("rank-one takes a single module family")
        probe = analysis.probe_rank_one(spec, opts["m_range"], opts["dcap"])
        report = Report("rank-one", _params(ctx), probe.verdict.value, dims=probe.dims)
        if probe.witness_seed is not None:
            report.witnesses = [vector_witness(probe.witness_seed, spec)]
        expected = spec.expected_irreducible()
        ok = expected == (probe.verdict is analysis.Verdict.IRREDUCIBLE_EVIDENCE)
        if not ok:
            report.counterexample = {"expected_irreducible": expected, "observed": probe.verdict.value}
        return report, ok
    _execute(ctx, body)


@cli.command("tensor-irr")
@spec_options
@click.option("--M", "m_range", default=4, show_default=True, type=click.IntRange(min=0))
@click.option("--D", "degree", default=3, show_default=True, type=click.IntRange(min=0))
@click.option("--random-seeds", default=None, type=click.IntRange(min=0),
              help="Random seed vectors besides 1@1 (default GCA_TENSOR_RANDOM_SEEDS).")
@click.option("--seed", default=None, type=int, help="RNG seed (default GCA_RANDOM_SEED).")
@common_options
@click.pass_context
def tensor_irr(ctx, **opts):
    """Irreducibility evidence, or the binomial proper submodule when λ1 = λ2."""
    def body():
        ts = build_spec(opts)
        if not isinstance(ts, TensorSpec):
            raise ModuleSpecError("tensor-irr takes a tensor shape")
        probe = analysis.probe_tensor_irreducible(ts, opts["m_range"], opts["degree"],
                                                  opts["random_seeds"], opts["seed"])
        report = Report("tensor-irr", _params(ctx), probe.verdict.value, dims=probe.dims)
        if probe.verdict is analysis.Verdict.REDUCIBLE_WITNESS and ts.lambdas_equal:
            report.witnesses = [vector_witness(v, ts) for v in probe.witness_vectors]
        expected = analysis.expected_tensor_irreducible(ts)
        ok = probe.certified and expected == (probe.verdict is analysis.Verdict.IRREDUCIBLE_EVIDENCE)
        if not ok:
            report.counterexample = {"expected_irreducible": expected, "observed": probe.verdict.value,
                                     "certified": probe.certified}
        return report, ok
    _execute(ctx, body)


@cli.command()
@spec_options
@click.option("--seed-exprs", multiple=True, required=True, help="Seed vector (repeatable).")
@click.option("--targets", multiple=True, help="Vector expected in the closure (repeatable).")
@click.option("--M", "m_range", default=4, show_default=True, type=click.IntRange(min=0))
@click.option("--Dcap", "dcap", default=4, show_default=True, type=click.IntRange(min=0))
@click.option("--list-basis", is_flag=True, help="Report every inserted vector.")
@common_options
@click.pass_context
def closure(ctx, **opts):
    """Weight-truncated submodule generated by seed vectors."""
    def body():
        spec = build_spec(opts)
        seeds = _parse_vectors(opts["seed_exprs"], spec)
        targets = _parse_vectors(opts["targets"], spec)
        report_run = generate(spec, seeds, opts["m_range"], opts["dcap"], targets=targets)
        dims = {"dim": report_run.dim, "discarded": report_run.discarded_count,
                "attempts": report_run.attempts}
        for w, count in enumerate(report_run.weight_profile()):
            dims[f"weight_le_{w}"] = count
        verdict = "saturated" if report_run.saturated else f"stopped_{report_run.stop_reason}"
        ok = True
        if targets:
            ok = bool(report_run.targets_found)
            verdict = "targets_found" if ok else "targets_missing"
        report = Report("closure", _params(ctx), verdict, dims=dims)
        if opts["list_basis"]:
            report.witnesses = [vector_witness(v, spec) for v in report_run.remainders]
        if not ok:
            missing = [t for t in targets if not report_run.contains(t)]
            report.counterexample = {"missing": [vector_witness(t, spec) for t in missing]}
        return report, ok
    _execute(ctx, body)


@cli.command("reduce")
@spec_options
@click.option("--expr", "expr", required=True, help="Vector to reduce, e.g. 'Y @ 1'.")
@common_options
@click.pass_context
def reduce_command(ctx, **opts):
    """Iterate the degree reduction of a TypeI ⊗ TypeI vector down to a constant."""
    def body():
        ts = build_spec(opts)
        if not isinstance(ts, TensorSpec):
            raise ModuleSpecError("reduce takes a tensor shape")
        v = parse_vector(opts["expr"], ts)
        report = Report("reduce", _params(ctx), "reduced")
        try:
            steps = analysis.reduce_to_constant(ts, v)
        except ReductionError as exc:
            report.verdict = "reduction_failed"
            report.counterexample = {"message": str(exc)}
            return report, False
        report.dims = {"steps": len(steps)}
        for step in steps:
            report.witnesses.append(
                f"case={step.case_id} m={step.m} deg={tuple(step.before_deg)}->{tuple(step.after_deg)}")
        final = steps[-1].result if steps else v
        report.witnesses.append(vector_witness(final, ts))
        return report, True
    _execute(ctx, body)


@cli.command()
@spec_options
@click.option("--kind", type=click.Choice([k.value for k in analysis.MinimalKind]),
              help="Binomial spanning set (default from the tensor shape).")
@click.option("--weight", default=None, type=click.IntRange(min=0),
              help="Truncation weight of the spanning set (default Dcap).")
@click.option("--seed-exprs", multiple=True, help="Explicit spanning vectors (replace --kind).")
@click.option("--M", "m_range", default=3, show_default=True, type=click.IntRange(min=0))
@click.option("--Dcap", "dcap", default=5, show_default=True, type=click.IntRange(min=1))
@common_options
@click.pass_context
def invariance(ctx, **opts):
    """Check that a spanning set is closed under the generators."""
    def body():
        ts = build_spec(opts)
        if opts["seed_exprs"]:
            spanning = _parse_vectors(opts["seed_exprs"], ts)
        else:
            if not isinstance(ts, TensorSpec):
                raise ModuleSpecError("binomial spanning sets live in tensor products")
            kind = analysis.MinimalKind(opts["kind"]) if opts["kind"] else analysis.minimal_kind_for(ts)
            weight = opts["dcap"] if opts["weight"] is None else opts["weight"]
            spanning = analysis.minimal_submodule_up_to_weight(kind, weight)
        result = analysis.check_invariance(ts, spanning, opts["m_range"], opts["dcap"])
        report = Report("invariance", _params(ctx), "invariant" if result else "not_invariant",
                        dims={"span": len(spanning), "checked": result.checked})
        if isinstance(ts, TensorSpec):
            probe = Vector.monomial((0, 1, 0, 0))
            proper = not span_of(spanning, ts.arity).member(probe)
            report.witnesses.append(f"proper={'true' if proper else 'false'}")
        if not result:
            g, v, image = result.counterexample
            report.counterexample = {"generator": str(g), "vector": vector_witness(v, ts),
                                     "image": vector_witness(image, ts)}
        return report, result.holds
    _execute(ctx, body)


def _bounds(opts) -> Tuple[Optional[int], Optional[int]]:
    return opts["degree"], opts["m_range"]


@cli.command()
@click.option("--A", "a_spec", required=True, help="Source tensor, e.g. 'mixed:2,0,1;3,0,1'.")
@click.option("--B", "b_spec", required=True, help="Target tensor, same syntax.")
@click.option("--D", "degree", default=None, type=click.IntRange(min=1), help="Degree bound (default GCA_ISO_DEGREE).")
@click.option("--M", "m_range", default=None, type=click.IntRange(min=0), help="Index bound (default GCA_ISO_RANGE).")
@common_options
@click.pass_context
def intertwiner(ctx, **opts):
    """Bounded-degree intertwiners between two tensor products."""
    def body():
        A, B = parse_tensor_literal(opts["a_spec"]), parse_tensor_literal(opts["b_spec"])
        solved = analysis.intertwiner_solve(A, B, *_bounds(opts))
        report = Report("intertwiner", _params(ctx), "solved",
                        dims={"dim": solved.dim, "unknowns": solved.unknowns, "rank": solved.rank})
        for source, image in sorted((solved.sample or {}).items()):
            report.witnesses.append(
                f"{format_vector(Vector.monomial(source), A)} -> {format_vector(image, B)}")
        return report, True
    _execute(ctx, body)


@cli.command()
@click.option("--A", "a_spec", required=True, help="First tensor, e.g. 'mixed:2,0,1;3,0,1'.")
@click.option("--B", "b_spec", required=True, help="Second tensor, same syntax.")
@click.option("--D", "degree", default=None, type=click.IntRange(min=1), help="Cross-check degree bound.")
@click.option("--M", "m_range", default=None, type=click.IntRange(min=0), help="Cross-check index bound.")
@common_options
@click.pass_context
def classify(ctx, **opts):
    """Isomorphism verdict from the parameter triples, cross-checked by intertwiners."""
    def body():
        A, B = parse_tensor_literal(opts["a_spec"]), parse_tensor_literal(opts["b_spec"])
        verdict = analysis.classify_iso(A, B, *_bounds(opts))
        report = Report("classify", _params(ctx), "equivalent" if verdict.equivalent else "not_equivalent",
                        dims={"witness_dim": verdict.witness_dim})
        report.witnesses.append(f"matching={verdict.matching.value}")
        if verdict.obstruction is not None:
            report.witnesses.append(f"obstruction={format_scalar(verdict.obstruction)}")
        if not verdict.consistent:
            report.counterexample = {"equivalent": verdict.equivalent, "witness_dim": verdict.witness_dim}
        click.echo(f"   {display(A.describe())} vs {display(B.describe())}", err=True)
        return report, verdict.consistent
    _execute(ctx, body)


@cli.command()
@click.option("--vals", required=True, help="λ1,λ1',λ2,λ2' as Gaussian-rational literals.")
@common_options
@click.pass_context
def vandermonde(ctx, **opts):
    """Determinant of the signed power matrix against its six-factor product."""
    def body():
        values = [part.strip() for part in opts["vals"].split(",")]
        if len(values) != 4:
            raise ModuleSpecError(f"--vals needs four values, got {len(values)}")
        result = analysis.vandermonde_obstruction(*(scalar(v) for v in values))
        ok = (not result.det) == result.factored_zero
        report = Report("vandermonde", _params(ctx), "consistent" if ok else "falsified")
        report.witnesses = [f"det={format_scalar(result.det)}",
                            f"factored_zero={'true' if result.factored_zero else 'false'}"]
        if not ok:
            report.counterexample = {"det": format_scalar(result.det), "product": format_scalar(result.product)}
        return report, ok
    _execute(ctx, body)


def run_command(argv: Sequence[str]) -> int:
    """Run one invocation and return its exit code instead of exiting."""
    try:
        code = cli.main(args=list(argv), prog_name="gca-verify", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return 1
    return code if isinstance(code, int) else 0


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
