# Copyright (C) 2024 metricLie Working Group
# Author(s): metricLie developers
#
# Modifications:
#
# Disclaimer:
# metricLie is under the LGPL v3 license found in the root directory LICENSE.md
# Everyone is permitted to copy and distribute verbatim copies of this license
# document, but changing it is not allowed.
#
# This version of the GNU Lesser General Public License incorporates the terms
# and conditions of version 3 of the GNU General Public License,
# supplemented by the additional permissions listed below.
import logging

metriclie_log = logging.getLogger('metriclie')


class InvalidFamilyParameterError(Exception):
    """
    Error given when a catalog family is called with parameters outside of
    its admissible range
    """
    def __init__(self, family: str, reason: str):
        self.family = family
        self.message = "Invalid parameters for the family {family}:"\
            " {reason}".format(family=family, reason=reason)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class UnknownFamilyError(Exception):
    """
    Error given when a family tag is not in the catalog
    """
    def __init__(self, family: str, known: list):
        self.message = "The family {family} is not in the catalog. Known"\
            " families: {known}".format(family=family,
                                        known=", ".join(known))
        super().__init__(self.message)
        metriclie_log.error(self.message)
