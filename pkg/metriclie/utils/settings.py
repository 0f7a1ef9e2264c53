# Copyright (C) 2024 metricLie Working Group
# Author(s): metricLie developers
#
# Disclaimer:
# metricLie is under the LGPL v3 license found in the root directory LICENSE.md
# Everyone is permitted to copy and distribute verbatim copies of this license
# document, but changing it is not allowed.
#
# This version of the GNU Lesser General Public License incorporates the terms
# and conditions of version 3 of the GNU General Public License,
# supplemented by the additional permissions listed below.
#
# Modifications:
#
""" Library defaults read from the packaged settings.yaml """
import os

import numpy as np
import yaml

from typing import Any, Dict

SETTINGS_FILE = os.path.join(os.path.dirname(__file__), 'settings.yaml')


class Settings():
    """
    Read-only access to the defaults of settings.yaml. The file is read
    once, on first access.

    Methods
    -------
    get
    all
    rng
    """
    _values: Dict[str, Any] = {}

    def __str__(self):
        return "Settings from {}:\n".format(SETTINGS_FILE) + \
            "\n".join("    {}: {}".format(key, value)
                      for key, value in sorted(self.all().items()))

    @classmethod
    def all(cls) -> Dict[str, Any]:
        if not cls._values:
            with open(SETTINGS_FILE, 'r') as settings_file:
                cls._values = yaml.safe_load(settings_file) or {}
        return dict(cls._values)

    @classmethod
    def get(cls, key: str, override=None):
        """ the setting key unless an override is given """
        if override is not None:
            return override
        return cls.all()[key]

    @classmethod
    def rng(cls, seed: int = None) -> np.random.Generator:
        """ seeded generator used for every random choice of the library """
        return np.random.default_rng(cls.get('random_seed', seed))
