#
# License: BSD
#   See the LICENSE file at the root of this repository.
#
##############################################################################
# Documentation
##############################################################################

"""Machinery for initialisation and export of the parameters of a run."""

##############################################################################
# Imports
##############################################################################

from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

import sympy

from .errors import InputError

##############################################################################
# Helper Methods
##############################################################################


def _convert_list_or_tuple(values, to_str=str):
    return "(" + ",".join(to_str(value) for value in values) + ")"


def _bool_to_str(value: bool) -> str:
    return "true" if value else "false"


##############################################################################
# Data Structures
##############################################################################


class ConfigError(InputError):
    """A parameter that cannot be converted or violates its constraints."""


class Parameter(object):
    """Stores default, current and metadata about a parameter."""

    def __init__(
        self,
        key: str,
        default: Any,
        touched: bool = False,
        to_str: Callable[[Any], str] = str
    ):
        """
        Initialise the parameter with defaults, state and metadata.

        Args:
            key: name of this parameter
            default: initial value
            touched: given explicitly (always exported) or otherwise
            to_str: Custom string conversion function. Defaults to str()
        """
        self.key = key
        self.default: Any = default
        self.value: Any = default
        self.touched: bool = touched
        self.to_str = to_str

    def update(self, new_value: Any):
        """Override the current value.

        Since it's no longer the default, flag it
        as touched so it gets exported.

        Args:
            new_value: the new value
        """
        self.value = new_value
        self.touched = True

    def __repr__(self) -> str:
        """Return the unique representation for the class."""
        return f"Parameter(default={self.default},value={self.value},touched={self.touched})"


class AttrDict(dict):
    """Convenience class that enables attribute access for dictionaries."""

    def __init__(self, *args, **kwargs):
        """Pass through initialisation to the dict class."""
        super(AttrDict, self).__init__(*args, **kwargs)
        self.__dict__ = self


##############################################################################
# Classes & Methods
##############################################################################


class Parameters(object):
    """Typed parameters initialised from raw string fields.

    Raw fields usually come from the command line (an argparse namespace,
    with ``None`` for options that were not given). Each ``register_*``
    method converts its field, or falls back to the default if the field is
    absent. Parameters given explicitly are flagged as touched.

    .. code-block:: python

        parameters = Parameters(fields={"depth": "3"})
        parameters.register_int_parameter(key="depth", default_value=2)
        parameters.register_int_parameter(key="jobs", default_value=1)
        parameters.depth.value    # 3
        parameters.to_fields()    # {"depth": "3"}

    **Modes**

    Export is either partial (touched parameters only) or full (all
    parameters), see :meth:`to_fields`.

    Raises:
        ConfigError: from any ``register_*`` method whose field fails conversion
    """

    def __init__(self, fields: Optional[Mapping[str, Any]] = None, set_all: bool = False):
        """Keep the raw fields and start an empty registry."""
        # using an AttrDict here for convenient attribute referencing on a dict
        self._parameters = AttrDict(dict())
        self._fields = dict(fields or {})
        self.set_all = set_all

    def __getattr__(self, key: str) -> Parameter:
        """Return a registered parameter as an attribute.

        Raises:
            AttributeError: if the parameter does not exist
        """
        if key.startswith("_"):
            raise AttributeError(key)
        try:
            return self._parameters[key]
        except KeyError:
            raise AttributeError("no parameter named '{}'".format(key))

    def as_dict(self) -> Dict[str, Parameter]:
        """
        Return a dictionary of all the parameters.

        Returns:
            An ordinary (attributeless) dictionary.
        """
        return dict(self._parameters.__dict__)

    def register_int_parameter(self, key: str, default_value: int, minimum: Optional[int] = None):
        """
        Register an int type parameter.

        Args:
            key: parameter name
            default_value: used when the field is absent
            minimum: smallest accepted value, if any
        """
        if self._already_registered(key):
            return
        try:
            raw = self._fetch_field(key)
            try:
                parameter = Parameter(key=key, default=int(raw), touched=True)
            except ValueError:
                raise ConfigError("{} expects an integer, got '{}'".format(key, raw))
        except KeyError:
            parameter = Parameter(key=key, default=default_value)
        if minimum is not None and parameter.value < minimum:
            raise ConfigError("{} must be at least {}, got {}".format(key, minimum, parameter.value))
        self._parameters[key] = parameter

    def register_string_parameter(self, key: str, default_value: str):
        """Register a string parameter."""
        if self._already_registered(key):
            return
        try:
            parameter = Parameter(key=key, default=str(self._fetch_field(key)), touched=True)
        except KeyError:
            parameter = Parameter(key=key, default=default_value)
        self._parameters[key] = parameter

    def register_string_list_parameter(self, key: str, default_value: Sequence[str]):
        """Register a string list parameter (given as a list or as ``(a, b)`` text)."""
        if self._already_registered(key):
            return
        try:
            raw = self._fetch_field(key)
            values = [str(v) for v in raw] if isinstance(raw, (list, tuple)) else self._read_list_or_tuple(key)
            parameter = Parameter(key=key, default=values, touched=True, to_str=_convert_list_or_tuple)
        except KeyError:
            parameter = Parameter(key=key, default=list(default_value), to_str=_convert_list_or_tuple)
        self._parameters[key] = parameter

    def register_bool_parameter(self, key: str, default_value: bool):
        """Register a bool parameter."""
        if self._already_registered(key):
            return
        try:
            s = self._fetch_field(key)
            value = s if isinstance(s, bool) else str(s).lower() in ["true", "yes", "1"]
            parameter = Parameter(key=key, default=value, touched=True, to_str=_bool_to_str)
        except KeyError:
            parameter = Parameter(key=key, default=default_value, to_str=_bool_to_str)
        self._parameters[key] = parameter

    def register_choice_parameter(self, key: str, default_value: str, choices: Sequence[str]):
        """Register a string parameter restricted to a fixed set of choices."""
        if self._already_registered(key):
            return
        self.register_string_parameter(key, default_value)
        if self._parameters[key].value not in choices:
            value = self._parameters.pop(key).value
            raise ConfigError("{} must be one of {}, got '{}'".format(key, ", ".join(choices), value))

    def register_characteristic_parameter(self, key: str, default_value: int = 0):
        """Register a field characteristic: zero or a prime."""
        if self._already_registered(key):
            return
        self.register_int_parameter(key, default_value)
        value = self._parameters[key].value
        if value != 0 and not sympy.isprime(value):
            self._parameters.pop(key)
            raise ConfigError("{} must be 0 or a prime, got {}".format(key, value))

    def register_prime_list_parameter(self, key: str, default_value: Sequence[int]):
        """
        Register a list of primes, e.g. ``2,3,5``, ``(2, 3, 5)`` or ``[2, 3, 5]``.

        Raises:
            ConfigError: if an entry is not a prime
        """
        if self._already_registered(key):
            return
        try:
            raw_values = self._read_list_or_tuple(key)
            try:
                values = [int(value) for value in raw_values]
            except ValueError:
                raise ConfigError("{} expects integers, got '{}'".format(key, self._fetch_field(key)))
            parameter = Parameter(key=key, default=values, touched=True, to_str=_convert_list_or_tuple)
        except KeyError:
            parameter = Parameter(key=key, default=list(default_value), to_str=_convert_list_or_tuple)
        bad = [p for p in parameter.value if not sympy.isprime(p)]
        if bad:
            raise ConfigError("{} lists non-primes: {}".format(key, ", ".join(str(p) for p in bad)))
        self._parameters[key] = parameter

    def _read_list_or_tuple(self, key, split_sequence=","):
        raw_str = str(self._fetch_field(key)).strip()
        if raw_str and raw_str[0] in ("(", "["):
            raw_str = raw_str[1:]
        if raw_str and raw_str[-1] in (")", "]"):
            raw_str = raw_str[:-1]
        new_values = []
        if raw_str.strip():
            values = raw_str.split(split_sequence)
            # Remove any quotes that may be added to the string.
            for value in values:
                new_value = value.strip().strip("'\"")
                if new_value:
                    new_values.append(new_value)
        return new_values

    def update_parameter(self, key: str, value: Any):
        """Update a single parameter.

        Args:
            key: parameter to update
            value: the update
        """
        self._parameters[key].update(new_value=value)

    def to_fields(self, set_all: Optional[bool] = None) -> Dict[str, str]:
        """Export parameters as strings.

        Args:
            set_all: export every parameter rather than only touched ones
                (defaults to the mode given at construction)

        Returns:
            key to string value, in registration order
        """
        set_all = self.set_all if set_all is None else set_all
        values = {}
        for key, parameter in self._parameters.items():
            if set_all or parameter.touched:
                values[key] = parameter.to_str(parameter.value)
        return values

    def _already_registered(self, key: str) -> bool:
        return key in self._parameters

    def _fetch_field(self, key: str) -> Any:
        """Fetch a single raw field.

        Args:
            key: parameter name

        Returns:
            the parameter value prior to any necessary conversion

        Raises:
            KeyError: if the field does not exist or was not given
        """
        value = self._fields[key]
        if value is None:
            raise KeyError(key)
        return value


class RunConfig(Parameters):
    """The parameters of one command-line run.

    Args:
        fields: raw fields, typically ``vars(namespace)`` from argparse
        set_all: export all parameters rather than only the given ones

    Raises:
        ConfigError: if a characteristic is neither 0 nor prime, or a bound is not positive
    """

    DEFAULT_PRIMES: List[int] = [2, 3, 5, 7, 11, 13]

    def __init__(self, fields: Optional[Mapping[str, Any]] = None, set_all: bool = False):
        super(RunConfig, self).__init__(fields, set_all)
        self.register_string_parameter(key="command", default_value="")
        self.register_string_list_parameter(key="paths", default_value=[])
        self.register_characteristic_parameter(key="characteristic", default_value=0)
        self.register_int_parameter(key="prime_bound", default_value=13, minimum=2)
        self.register_int_parameter(key="depth", default_value=2, minimum=0)
        self.register_int_parameter(key="budget", default_value=20000, minimum=1)
        self.register_int_parameter(key="jobs", default_value=1, minimum=1)
        self.register_choice_parameter(key="format", default_value="text", choices=("text", "json"))
        self.register_prime_list_parameter(key="primes", default_value=RunConfig.DEFAULT_PRIMES)

    @property
    def structured(self) -> bool:
        return self.format.value == "json"
