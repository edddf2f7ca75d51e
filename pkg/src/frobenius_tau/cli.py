"""Command-line front end.

Every subcommand shares ``-p``, ``-d``, ``--max-den``, ``--degree-cap``,
``--json`` and ``--verbose``. Divisors are written ``t1*div(f1); t2*div(f2)``
with ``t`` an integer or ``a/b``; ``0`` is the zero divisor.

Exit codes: 0 on success, 1 when a computation raises a domain error, 2 for
malformed input or flags.
"""

from __future__ import annotations

import logging
import time
from typing import Annotated, Any, Callable, NoReturn, Optional

import typer
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from rich.console import Console
from rich.table import Table
from sympy import isprime

from .core.bootstrap import configure_logging
from .core.errors import FrobeniusTauError
from .core.settings import Settings, load_settings
from .io import certificates
from .io.parsing import parse_divisor, parse_generators, parse_polynomial, parse_rational
from .models.enums import OutputFormat
from .models.field import FieldConfig
from .models.ideal import IdealHandle
from .services import (
    FrobeniusService,
    GroebnerService,
    StabilityService,
    TestIdealService,
    ThresholdService,
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="frobenius-tau",
    help="Test ideals, F-thresholds and Frobenius roots over F_p[x1..xd].",
    no_args_is_help=True,
    add_completion=False,
)

USAGE_ERROR = 2
DOMAIN_ERROR = 1


class RunConfig(BaseModel):
    """Validated flags shared by every subcommand."""

    model_config = ConfigDict(frozen=True)

    p: int
    d: int = Field(ge=1)
    e_max: Optional[int] = Field(default=None, ge=1)
    max_den: int = Field(default=12, ge=1)
    output_format: OutputFormat = OutputFormat.TEXT
    degree_cap: int = Field(default=64, ge=1)

    @field_validator("p")
    @classmethod
    def _prime(cls, value: int) -> int:
        if not isprime(value):
            raise ValueError(f"characteristic {value} is not prime")
        return value

    def settings(self) -> Settings:
        return load_settings().with_overrides(degree_cap=self.degree_cap, max_den=self.max_den)

    def field(self) -> FieldConfig:
        return FieldConfig(self.p, self.d)

    def echo(self) -> dict[str, Any]:
        return {"p": self.p, "d": self.d, "e_max": self.e_max, "max_den": self.max_den}


# ------------------------------------------------------------- Options --
Prime = Annotated[int, typer.Option("-p", "--prime", help="Characteristic p (prime).")]
Dimension = Annotated[int, typer.Option("-d", "--dim", help="Number of variables d.")]
Level = Annotated[int, typer.Option("-e", "--level", "--emax", help="Frobenius level e.")]
EMax = Annotated[
    Optional[int],
    typer.Option("-e", "--emax", help="Largest chain level (default depends on p)."),
]
MaxDen = Annotated[int, typer.Option("--max-den", help="Denominator bound for rational grids.")]
DegreeCap = Annotated[int, typer.Option("--degree-cap", help="Gröbner S-pair degree cap.")]
AsJson = Annotated[bool, typer.Option("--json", help="Print a JSON certificate on stdout.")]
Verbose = Annotated[bool, typer.Option("-v", "--verbose", help="Log progress to stderr.")]


def _config(
    p: int,
    d: int,
    *,
    e_max: int | None = None,
    max_den: int = 12,
    degree_cap: int = 64,
    as_json: bool = False,
    verbose: bool = False,
) -> RunConfig:
    configure_logging(verbose)
    try:
        return RunConfig(
            p=p,
            d=d,
            e_max=e_max,
            max_den=max_den,
            degree_cap=degree_cap,
            output_format=OutputFormat.JSON if as_json else OutputFormat.TEXT,
        )
    except ValidationError as exc:
        message = "; ".join(
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}" for error in exc.errors()
        )
        _fail(f"Invalid options: {message}", USAGE_ERROR)


def _fail(message: str, code: int) -> NoReturn:
    Console(stderr=True).print(f"[bold red]Error:[/] {message}", highlight=False)
    raise typer.Exit(code)


def _parse(thunk: Callable[[], Any]) -> Any:
    """Run an input parser; any failure is a usage error."""

    try:
        return thunk()
    except FrobeniusTauError as exc:
        _fail(str(exc), USAGE_ERROR)


def _run(
    command: str,
    config: RunConfig,
    inputs: dict[str, Any],
    compute: Callable[[], dict[str, Any]],
    render: Callable[[Console, dict[str, Any]], None],
) -> None:
    started = time.perf_counter()
    try:
        result = compute()
    except ValueError as exc:
        logger.debug("%s failed", command, exc_info=True)
        _fail(str(exc), DOMAIN_ERROR)
    elapsed = time.perf_counter() - started
    if config.output_format is OutputFormat.JSON:
        certificate = certificates.build_certificate(
            command, {**config.echo(), **inputs}, result, elapsed=elapsed
        )
        typer.echo(certificates.dumps(certificate))
        return
    render(Console(highlight=False, soft_wrap=True), result)


def _ideal_text(generators: list[str]) -> str:
    return "(" + ", ".join(generators) + ")"


def _render_ideal(key: str, label: str) -> Callable[[Console, dict[str, Any]], None]:
    def render(console: Console, result: dict[str, Any]) -> None:
        console.print(f"{label} = {_ideal_text(result[key])}")

    return render


# ------------------------------------------------------------ Frobenius --
@app.command()
def decompose(
    f: Annotated[str, typer.Argument(help="Polynomial to decompose.")],
    p: Prime,
    d: Dimension,
    e: Level = 1,
    as_json: AsJson = False,
    verbose: Verbose = False,
) -> None:
    """Write f = Σ f_λ^(p^e)·x^λ over λ in [0, p^e)^d."""

    config = _config(p, d, as_json=as_json, verbose=verbose)
    field = config.field()
    poly = _parse(lambda: parse_polynomial(f, field, config.settings()))
    service = FrobeniusService(field, config.settings())

    def render(console: Console, result: dict[str, Any]) -> None:
        table = Table(title=f"Frobenius decomposition at e={result['e']}")
        table.add_column("λ")
        table.add_column("f_λ")
        for entry in result["parts"]:
            table.add_row(str(tuple(entry["index"])), entry["part"])
        console.print(table)

    _run(
        "decompose",
        config,
        {"f": str(poly), "e": e},
        lambda: certificates.decomposition_result(service.decompose(poly, e)),
        render,
    )


@app.command()
def trace(
    f: Annotated[str, typer.Argument(help="Polynomial.")],
    p: Prime,
    d: Dimension,
    e: Level = 1,
    as_json: AsJson = False,
    verbose: Verbose = False,
) -> None:
    """Trace of the e-th Frobenius applied to f."""

    config = _config(p, d, as_json=as_json, verbose=verbose)
    field = config.field()
    poly = _parse(lambda: parse_polynomial(f, field, config.settings()))
    service = FrobeniusService(field, config.settings())

    def render(console: Console, result: dict[str, Any]) -> None:
        console.print(f"Tr^{e}({poly}) = {result['trace']}")

    _run(
        "trace",
        config,
        {"f": str(poly), "e": e},
        lambda: {"trace": str(service.trace(poly, e))},
        render,
    )


@app.command()
def root(
    generators: Annotated[list[str], typer.Argument(help="Generators of J.")],
    p: Prime,
    d: Dimension,
    e: Level = 1,
    degree_cap: DegreeCap = 64,
    as_json: AsJson = False,
    verbose: Verbose = False,
) -> None:
    """The p^e-th root ideal I_e(J)."""

    config = _config(p, d, degree_cap=degree_cap, as_json=as_json, verbose=verbose)
    field = config.field()
    polys = _parse(lambda: parse_generators(generators, field, config.settings()))
    service = FrobeniusService(field, config.settings())

    def compute() -> dict[str, Any]:
        ideal = service.ideals.canonical(service.root_ideal(IdealHandle(field, polys), e))
        return {"ideal": certificates.ideal_to_strings(ideal)}

    _run(
        "root",
        config,
        {"generators": [str(g) for g in polys], "e": e},
        compute,
        _render_ideal("ideal", f"I_{e}(J)"),
    )


@app.command()
def gb(
    generators: Annotated[list[str], typer.Argument(help="Generators of the ideal.")],
    p: Prime,
    d: Dimension,
    degree_cap: DegreeCap = 64,
    as_json: AsJson = False,
    verbose: Verbose = False,
) -> None:
    """Reduced Gröbner basis in degree-lexicographic order."""

    config = _config(p, d, degree_cap=degree_cap, as_json=as_json, verbose=verbose)
    field = config.field()
    polys = _parse(lambda: parse_generators(generators, field, config.settings()))
    service = GroebnerService(field, config.settings())

    def render(console: Console, result: dict[str, Any]) -> None:
        for g in result["basis"]:
            console.print(g)

    _run(
        "gb",
        config,
        {"generators": [str(g) for g in polys]},
        lambda: {"basis": [str(g) for g in service.groebner(polys)]},
        render,
    )


# ---------------------------------------------------------- Test ideals --
@app.command("testideal")
def test_ideal(
    delta: Annotated[str, typer.Argument(help="Divisor Δ, e.g. '1/2*div(x); 1/3*div(y)'.")],
    p: Prime,
    d: Dimension,
    ideal: Annotated[
        Optional[list[str]],
        typer.Option("--ideal", "-a", help="Generator of a (repeatable)."),
    ] = None,
    t: Annotated[str, typer.Option("--t", help="Exponent t of a.")] = "0",
    e_max: EMax = None,
    degree_cap: DegreeCap = 64,
    as_json: AsJson = False,
    verbose: Verbose = False,
) -> None:
    """τ(R, Δ, a^t) with its chain metadata."""

    config = _config(p, d, e_max=e_max, degree_cap=degree_cap, as_json=as_json, verbose=verbose)
    field = config.field()
    settings = config.settings()
    divisor = _parse(lambda: parse_divisor(delta, field, settings))
    exponent = _parse(lambda: parse_rational(t))
    a = None
    if ideal:
        a = IdealHandle(field, _parse(lambda: parse_generators(ideal, field, settings)))
    service = TestIdealService(field, settings)

    def render(console: Console, result: dict[str, Any]) -> None:
        console.print(f"τ = {_ideal_text(result['ideal'])}")
        capped = " (capped)" if result["capped"] else ""
        console.print(
            f"stop: {result['stop']}{capped}, stabilised at level {result['stabilized_at']}"
            f" of {result['levels']}"
        )

    _run(
        "testideal",
        config,
        {
            "delta": str(divisor),
            "ideal": None if a is None else [str(g) for g in a.generators],
            "t": str(exponent),
        },
        lambda: certificates.test_ideal_result(service.test_ideal(divisor, a, exponent, config.e_max)),
        render,
    )


# ------------------------------------------------------------ Thresholds --
@app.command()
def fpt(
    f: Annotated[str, typer.Argument(help="Polynomial vanishing at the origin.")],
    p: Prime,
    d: Dimension,
    e_max: Annotated[int, typer.Option("-e", "--emax", help="Level of ν.")] = 1,
    chain_e_max: Annotated[
        Optional[int], typer.Option("--chain-emax", help="Chain level for confirmation.")
    ] = None,
    max_den: MaxDen = 12,
    degree_cap: DegreeCap = 64,
    as_json: AsJson = False,
    verbose: Verbose = False,
) -> None:
    """Bracket the F-pure threshold of f by ν_f(p^e)."""

    config = _config(
        p, d, e_max=e_max, max_den=max_den, degree_cap=degree_cap, as_json=as_json, verbose=verbose
    )
    field = config.field()
    poly = _parse(lambda: parse_polynomial(f, field, config.settings()))
    service = ThresholdService(field, config.settings())

    def render(console: Console, result: dict[str, Any]) -> None:
        console.print(f"ν = {result['nu']} at e = {result['e']}")
        console.print(f"fpt in ({result['lo']}, {result['hi']}]")
        if result["confirmed"] is not None:
            console.print(f"first grid value with proper τ: {result['confirmed']}")

    _run(
        "fpt",
        config,
        {"f": str(poly)},
        lambda: certificates.fpt_result(
            service.fpt_bracket(poly, e_max, max_den=max_den, chain_e_max=chain_e_max)
        ),
        render,
    )


@app.command()
def jumps(
    g: Annotated[str, typer.Argument(help="Polynomial g in the maximal ideal.")],
    p: Prime,
    d: Dimension,
    base: Annotated[str, typer.Option("--base", help="Base divisor Δ.")] = "0",
    lo: Annotated[str, typer.Option("--lo", help="Scan start (exclusive).")] = "0",
    hi: Annotated[str, typer.Option("--hi", help="Scan end (inclusive).")] = "1",
    smallest: Annotated[
        bool, typer.Option("--smallest", help="Only the smallest jump, by bisection.")
    ] = False,
    e_max: EMax = None,
    max_den: MaxDen = 12,
    degree_cap: DegreeCap = 64,
    as_json: AsJson = False,
    verbose: Verbose = False,
) -> None:
    """F-jumping numbers of s ↦ τ(Δ + s·div(g)) on a Farey grid."""

    config = _config(
        p, d, e_max=e_max, max_den=max_den, degree_cap=degree_cap, as_json=as_json, verbose=verbose
    )
    field = config.field()
    settings = config.settings()
    poly = _parse(lambda: parse_polynomial(g, field, settings))
    divisor = _parse(lambda: parse_divisor(base, field, settings))
    start = _parse(lambda: parse_rational(lo))
    end = _parse(lambda: parse_rational(hi))
    inputs = {"g": str(poly), "base": str(divisor), "lo": str(start), "hi": str(end)}

    if smallest:
        stability = StabilityService(field, settings)

        def render_smallest(console: Console, result: dict[str, Any]) -> None:
            if result["found"]:
                console.print(f"smallest jumping number: {result['value']}")
            else:
                console.print(f"no jump on the grid up to {result['value']}")

        _run(
            "jumps",
            config,
            {**inputs, "smallest": True},
            lambda: certificates.jumping_number_result(
                stability.smallest_jumping_number(
                    divisor, poly, max_den, config.e_max, upper=end
                )
            ),
            render_smallest,
        )
        return

    thresholds = ThresholdService(field, settings)

    def render(console: Console, result: dict[str, Any]) -> None:
        listed = ", ".join(result["jumps"]) or "none"
        console.print(f"jumps in ({start}, {end}]: {listed}")
        if result["capped_points"]:
            console.print(f"capped grid points: {', '.join(result['capped_points'])}")

    _run(
        "jumps",
        config,
        inputs,
        lambda: certificates.jump_scan_result(
            thresholds.jump_scan(divisor, poly, start, end, max_den, config.e_max)
        ),
        render,
    )


# ------------------------------------------------------------- Stability --
@app.command()
def check(
    p: Prime,
    d: Dimension,
    base: Annotated[str, typer.Option("--base", help="Base divisor Δ.")] = "0",
    pert: Annotated[str, typer.Option("--pert", help="Perturbation E.")] = "0",
    e_max: EMax = None,
    degree_cap: DegreeCap = 64,
    as_json: AsJson = False,
    verbose: Verbose = False,
) -> None:
    """Whether τ(Δ + E) = τ(Δ)."""

    config = _config(p, d, e_max=e_max, degree_cap=degree_cap, as_json=as_json, verbose=verbose)
    field = config.field()
    settings = config.settings()
    divisor = _parse(lambda: parse_divisor(base, field, settings))
    perturbation = _parse(lambda: parse_divisor(pert, field, settings))
    service = StabilityService(field, settings)

    def render(console: Console, result: dict[str, Any]) -> None:
        console.print(f"equal={str(result['equal']).lower()}")
        console.print(f"τ(Δ) = {_ideal_text(result['base'])}")
        console.print(f"τ(Δ + E) = {_ideal_text(result['perturbed'])}")

    _run(
        "check",
        config,
        {"base": str(divisor), "pert": str(perturbation)},
        lambda: certificates.perturbation_result(
            service.compare_at_origin(divisor, perturbation, config.e_max)
        ),
        render,
    )


@app.command()
def scan(
    p: Prime,
    d: Dimension,
    base: Annotated[str, typer.Option("--base", help="Base divisor Δ.")] = "0",
    probe: Annotated[
        Optional[list[str]],
        typer.Option("--probe", help="Probe r in the maximal ideal (repeatable)."),
    ] = None,
    n_max: Annotated[int, typer.Option("--nmax", help="Largest level n in div(r)/p^n.")] = 3,
    n_min: Annotated[int, typer.Option("--nmin", help="Smallest level n.")] = 1,
    e_max: EMax = None,
    degree_cap: DegreeCap = 64,
    as_json: AsJson = False,
    verbose: Verbose = False,
) -> None:
    """Measure how small a perturbation div(r)/p^n must be to keep τ(Δ)."""

    config = _config(p, d, e_max=e_max, degree_cap=degree_cap, as_json=as_json, verbose=verbose)
    field = config.field()
    settings = config.settings()
    divisor = _parse(lambda: parse_divisor(base, field, settings))
    service = StabilityService(field, settings)
    probes = (
        _parse(lambda: parse_generators(probe, field, settings)) if probe else service.default_probes()
    )

    def render(console: Console, result: dict[str, Any]) -> None:
        console.print(f"τ(Δ) = {_ideal_text(result['base_tau'])}")
        table = Table(title="Perturbations div(r)/p^n")
        for column in ("r", "n", "ord", "mult", "equal"):
            table.add_column(column)
        for w in result["witnesses"]:
            table.add_row(w["probe"], str(w["level"]), str(w["ord"]), w["mult"], str(w["equal"]))
        console.print(table)
        console.print(f"delta lower bound: {result['delta_lower']}")
        for name, tail in result["tail_index"].items():
            console.print(f"tail index N({name}) = {tail if tail is not None else 'none'}")

    _run(
        "scan",
        config,
        {"base": str(divisor), "probes": [str(r) for r in probes], "n_min": n_min, "n_max": n_max},
        lambda: certificates.stability_result(
            service.stability_scan(divisor, probes, n_max, config.e_max, n_min=n_min)
        ),
        render,
    )

