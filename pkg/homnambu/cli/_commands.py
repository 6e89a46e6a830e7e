"""
Subcommands. Every command takes a validated run configuration and returns
`(exit status, rendered report)`; the mathematics lives in the library.
"""
import json
import logging

from homnambu.deformation import (create_family, family_creator, save,
                                  verify_deformation)
from homnambu.errors import InvalidParameterError, UnknownNameError
from homnambu.homalgebra import (check_hom_nambu_identity,
                                 check_multiplicative, check_skew_symmetry)
from homnambu.models import counterexamples, create_model, model_creator

_log = logging.getLogger(__name__)

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

VERIFY_SCHEMA = "homnambu.verify/1"
LISTING_SCHEMA = "homnambu.models/1"

# violations listed per check in text reports
TEXT_VIOLATION_LIMIT = 10


def render_json(data):
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) \
        + "\n"


def _status(passed):
    return "passed" if passed else "FAILED"


def _format_params(params):
    return ", ".join(f"{key}={params[key]}" for key in sorted(params)) \
        or "none"


def _witness(witness):
    return "(" + ", ".join(str(x) for x in witness) + ")"


def _require(value, what):
    if not value:
        raise InvalidParameterError(f"Missing {what}")
    return value


def _collect_params(cfg, creator, name):
    """
    Parameters and sample settings of the run that the schema of `name`
    accepts. Set values it does not accept are dropped with a warning.
    """
    values = dict(cfg.params)
    values.update(cfg.sample)
    values = {key: value for key, value in values.items()
              if value is not None}
    keys = creator.parameter_keys(name)
    if keys is None:
        return values
    ignored = sorted(set(values) - set(keys))
    if ignored:
        _log.warning(f"{creator.kind} '{name}' ignores "
                     f"{', '.join(ignored)}",
                     extra={"target": name, "ignored": ignored})
    return {key: value for key, value in values.items() if key in keys}


def _render_report(report):
    lines = [f"{report.check}: {_status(report.passed)} "
             f"({report.sample_size} samples"
             + (f", {len(report.violations)} violations)"
                if report.violations else ")")]
    for violation in report.violations[:TEXT_VIOLATION_LIMIT]:
        detail = f"  [{violation.detail}]" if violation.detail else ""
        lines.append(f"  {_witness(violation.witness)} -> "
                     f"{violation.residual}{detail}")
    hidden = len(report.violations) - TEXT_VIOLATION_LIMIT
    if hidden > 0:
        lines.append(f"  ... {hidden} more")
    return lines


def cmd_verify(cfg):
    """
    Skew-symmetry, hom-Nambu identity (untwisted with `plain_nambu`) and
    multiplicativity of a model on its default samples.
    """
    name = _require(cfg.model, "model id")
    model = create_model(name, _collect_params(cfg, model_creator, name))
    algebra = model.algebra
    triples = model.triples()
    reports = [
        check_skew_symmetry(algebra, triples),
        check_hom_nambu_identity(algebra, model.tuples(),
                                 plain=cfg.plain_nambu),
        check_multiplicative(algebra, triples, model.vectors()),
    ]
    passed = all(report.passed for report in reports)
    _log.info(f"verify {name}: {_status(passed)}",
              extra={"model": name, "passed": passed})

    if cfg.format == "json":
        text = render_json({
            "schema": VERIFY_SCHEMA,
            "model": name,
            "algebra": str(algebra),
            "params": model.params(),
            "plain_nambu": cfg.plain_nambu,
            "passed": passed,
            "reports": [report.to_dict() for report in reports],
        })
    else:
        lines = [f"model: {name}", f"algebra: {algebra}",
                 f"params: {_format_params(model.params())}"]
        for report in reports:
            lines.extend(_render_report(report))
        lines.append(f"result: {_status(passed)}")
        text = "\n".join(lines) + "\n"
    return (EXIT_PASSED if passed else EXIT_FAILED), text


def cmd_counterexample(cfg):
    """
    Reproduce one of the worked counterexamples; passes when both sides match
    the expected values.
    """
    name = _require(cfg.name, "counterexample name")
    try:
        compute = counterexamples[name]
    except KeyError as e:
        raise UnknownNameError(f"Unknown counterexample '{name}', expected "
                               f"one of {', '.join(sorted(counterexamples))}"
                               ) from e
    k4 = cfg.params.get("k4")
    if k4 is not None:
        if name != "jacobian-k4":
            raise InvalidParameterError(f"--k4 does not apply to '{name}'")
        result = compute(k4=k4)
    else:
        result = compute()

    if cfg.format == "json":
        text = render_json(result.to_dict())
    else:
        lines = [f"counterexample: {result.name}",
                 f"setting: {result.setting}",
                 f"witness: {_witness(result.witness)}",
                 f"lhs: {result.lhs}",
                 f"rhs: {result.rhs}",
                 f"residual: {result.residual}",
                 f"expected lhs: {result.expected_lhs}",
                 f"expected rhs: {result.expected_rhs}",
                 f"matches expected: "
                 f"{'yes' if result.matches_expected else 'no'}"]
        if result.verdict is not None:
            lines.append(f"verdict: {result.verdict}")
        text = "\n".join(lines) + "\n"
    return (EXIT_PASSED if result.matches_expected else EXIT_FAILED), text


def cmd_deform(cfg):
    """
    Build a deformation family, verify it modulo degree N+1 and print the
    per-degree table.
    """
    name = _require(cfg.model, "family id")
    params = _collect_params(cfg, family_creator, name)
    if cfg.order is not None:
        params["order"] = cfg.order
    family = create_family(name, params)
    report = verify_deformation(family)
    if cfg.save:
        save(family, cfg.save)

    if cfg.format == "json":
        data = report.to_dict()
        data["params"] = family.params
        text = render_json(data)
    else:
        lines = [f"family: {family}", f"base: {family.base}",
                 f"params: {_format_params(family.params)}",
                 "degree  checked  failing"]
        for row in report.degrees:
            lines.append(f"{row.degree:>6}  {row.checked:>7}  "
                         f"{row.failing:>7}  {_status(row.passed)}")
        for failure in report.failures[:TEXT_VIOLATION_LIMIT]:
            for index, value in failure.coefficients.items():
                lines.append(f"  {_witness(failure.witness)} t^({index}): "
                             f"{value}")
        lines.extend(_render_report(report.skew))
        lines.append(f"result: {_status(report.passed)}")
        text = "\n".join(lines) + "\n"
    return (EXIT_PASSED if report.passed else EXIT_FAILED), text


def cmd_list_models(cfg):
    listing = {"models": model_creator.describe(),
               "families": family_creator.describe(),
               "counterexamples": sorted(counterexamples)}
    if cfg.format == "json":
        return EXIT_PASSED, render_json(dict(listing, schema=LISTING_SCHEMA))

    lines = ["models:"]
    for name, keys in listing["models"].items():
        lines.append(f"  {name}: {', '.join(keys)}")
    lines.append("families:")
    for name, keys in listing["families"].items():
        lines.append(f"  {name}: {', '.join(keys)}")
    lines.append("counterexamples:")
    lines.extend(f"  {name}" for name in listing["counterexamples"])
    return EXIT_PASSED, "\n".join(lines) + "\n"


commands = {
    "verify": cmd_verify,
    "counterexample": cmd_counterexample,
    "deform": cmd_deform,
    "list-models": cmd_list_models,
}
