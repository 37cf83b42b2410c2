"""User settings for the default bounds of the deciders and searches."""
import collections
import json
import logging
import os
import time

import appdirs

from .utils import safe_makedirs


LOGGER = logging.getLogger(__name__)

APPNAME = 'tcgtools'

SETTINGS_FILE = 'settings.json'


class ConfigurationError(Exception):
    pass


SettingsBase = collections.namedtuple(
    typename='SettingsBase',
    field_names=['k_max', 'definite_k_max', 'mon_n_max', 'max_states', 'search_cap', 'max_witness_n', 'workers'],
)


class Settings(SettingsBase):
    """The bounds used when a command does not give its own.

    Attributes
    ----------
    k_max : int
        The largest window width tried by the SLT decider.
    definite_k_max : int
        The largest parameter tried by the definiteness decider.
    mon_n_max : int
        The largest number of sub-alphabet stars tried for MON_n.
    max_states : int
        The state cap of determinization.
    search_cap : int
        The cap of the right-linear grammar search.
    max_witness_n : int
        The largest parameter accepted by the witness catalog.
    workers : int
        Processes used to verify witnesses.
    """
    __slots__ = ()


DEFAULTS = Settings(
    k_max=4,
    definite_k_max=8,
    mon_n_max=3,
    max_states=10 ** 6,
    search_cap=200000,
    max_witness_n=6,
    workers=1,
)

# Raising these above the defaults is allowed with a warning.
_WARN_ABOVE = {'k_max': DEFAULTS.k_max, 'max_witness_n': DEFAULTS.max_witness_n}


def default_settings_path():
    return os.path.join(appdirs.user_config_dir(appname=APPNAME), SETTINGS_FILE)


def _read_settings_file(path):
    try:
        with open(path, encoding='utf-8') as f:
            values = json.load(f)
    except ValueError as e:
        raise ConfigurationError('The settings file {0} is not valid JSON: {1}'.format(path, e))
    if not isinstance(values, dict):
        raise ConfigurationError('The settings file {0} must hold a JSON object.'.format(path))
    return values


def load_settings(path=None, **overrides):
    """Load the settings.

    The defaults are updated from the settings file, then from the keyword
    overrides. Overrides that are None are ignored.

    Parameters
    ----------
    path : path, optional
        The settings file. The default is settings.json in the user
        configuration directory, which need not exist.
    **overrides
        Settings fields.

    Returns
    -------
    Settings

    Raises
    ------
    ConfigurationError
        If a key is unknown, a value is not a positive integer or an
        explicit settings file is missing.
    """
    values = DEFAULTS._asdict()
    if path is None:
        path = default_settings_path()
        if os.path.exists(path):
            values.update(_read_settings_file(path))
    elif not os.path.exists(path):
        raise ConfigurationError('The settings file {0} does not exist.'.format(path))
    else:
        values.update(_read_settings_file(path))
    values.update((key, value) for key, value in overrides.items() if value is not None)
    unknown = sorted(set(values) - set(Settings._fields))
    if unknown:
        raise ConfigurationError('Unknown settings: {0}.'.format(', '.join(unknown)))
    for key, value in values.items():
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ConfigurationError('The setting {0} must be a positive integer, got {1!r}.'.format(key, value))
    for key, limit in _WARN_ABOVE.items():
        if values[key] > limit:
            LOGGER.warning('%s=%d is above the default %d; checks may be slow.', key, values[key], limit)
    return Settings(**values)


def report_dir(name):
    """Create a timestamped directory for the saved reports of a run.

    Parameters
    ----------
    name : str
        The report name, for example 'witness'.

    Returns
    -------
    path
    """
    user_data_dir = appdirs.user_data_dir(appname=APPNAME)
    path = os.path.join(user_data_dir, 'reports', name, time.strftime('%Y%m%d_%H%M%S'))
    safe_makedirs(path)
    LOGGER.info('Saving reports in %s', path)
    return path
