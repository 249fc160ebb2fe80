"""Experiment configuration: settings profile, then JSON file, then CLI overrides."""
import copy
import json
import logging
from pathlib import Path

from django.conf import settings

from .bandit import TrainerConfig
from .exceptions import ConfigError, DomainError
from .experiment import ExperimentConfig
from .forms import ExperimentConfigForm, SbmConfigForm, SolverConfigForm, TrainerConfigForm
from .graphs import SbmConfig
from .recovery import SolverConfig

logger = logging.getLogger(__name__)

SECTION_FORMS = {
    'sbm': SbmConfigForm,
    'trainer': TrainerConfigForm,
    'solver': SolverConfigForm,
}


def merge_config(base, extra):
    """Overlay ``extra`` on ``base``; nested sections merge key by key."""
    merged = copy.deepcopy(base)
    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key].update(value)
        else:
            merged[key] = value
    return merged


def read_config_file(path):
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return data


def profile_data(name=None):
    name = name or settings.BENCH_DEFAULT_PROFILE
    try:
        return copy.deepcopy(settings.BENCH_PROFILES[name])
    except KeyError:
        raise ConfigError(
            f"unknown profile {name!r}; available: {', '.join(sorted(settings.BENCH_PROFILES))}"
        ) from None


def _form_errors(prefix, form):
    return [
        f"{prefix}{field if field != '__all__' else 'config'}: {message}"
        for field, messages in form.errors.items()
        for message in messages
    ]


def build_config(data):
    unknown = set(data) - set(SECTION_FORMS) - set(ExperimentConfigForm.base_fields)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")

    errors, cleaned = [], {}
    for section, form_class in SECTION_FORMS.items():
        values = data.get(section, {})
        if not isinstance(values, dict):
            errors.append(f"{section}: must be an object")
            continue
        stray = set(values) - set(form_class.base_fields)
        errors.extend(f"{section}.{key}: unknown key" for key in sorted(stray))
        form = form_class(values)
        if form.is_valid():
            cleaned[section] = form.cleaned_data
        else:
            errors.extend(_form_errors(f"{section}.", form))

    top = ExperimentConfigForm({key: value for key, value in data.items() if key not in SECTION_FORMS})
    if not top.is_valid():
        errors.extend(_form_errors("", top))
    if errors:
        raise ConfigError("invalid configuration:\n  " + "\n  ".join(errors))

    sbm = dict(cleaned['sbm'])
    cluster_sizes = sbm.pop('cluster_sizes')
    top_values = top.cleaned_data
    try:
        return ExperimentConfig(
            sbm=SbmConfig(**sbm),
            trainer=TrainerConfig(**cleaned['trainer']),
            solver=SolverConfig(**cleaned['solver']),
            cluster_sizes=cluster_sizes,
            train_graphs=top_values['train_graphs'],
            test_graphs=top_values['test_graphs'],
            budgets=top_values['budgets'],
            train_budget=top_values['train_budget'],
            master_seed=top_values['master_seed'],
            output_dir=Path(top_values['output_dir']),
            workers=top_values['workers'],
            db_floor=top_values['db_floor'],
            baseline_trials=top_values['baseline_trials'],
        )
    except DomainError as exc:
        raise ConfigError(f"invalid configuration: {exc}") from exc


def load_experiment_config(profile=None, config_file=None, overrides=None):
    data = profile_data(profile)
    if config_file:
        data = merge_config(data, read_config_file(config_file))
        logger.debug("merged config file %s", config_file)
    if overrides:
        data = merge_config(data, overrides)
    return build_config(data)
