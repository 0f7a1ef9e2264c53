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


class NotCocycleError(Exception):
    """
    Error given when a pair (alpha, gamma) is required to be a quadratic
    cocycle but is not
    """
    def __init__(self, violation: str):
        self.violation = violation
        self.message = "The pair (alpha, gamma) is not a quadratic"\
            " cocycle: {}".format(violation)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class MorphismOfPairsError(Exception):
    """
    Error given when (S, U) is not a morphism of pairs
    """
    def __init__(self, violation: str):
        self.violation = violation
        self.message = "(S, U) is not a morphism of pairs: {}"\
            "".format(violation)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class DecompositionNotDirectError(Exception):
    """
    Error given when the morphisms (q_i, j_i) do not form a non-trivial
    direct decomposition of the pair
    """
    def __init__(self, violation: str):
        self.message = "The given morphisms do not decompose the pair:"\
            " {}".format(violation)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class SectionError(Exception):
    """
    Error given when no valid (isotropic, equivariant) section of the
    projection onto the base exists or a supplied one is invalid
    """
    def __init__(self, violation: str):
        self.message = "Invalid section: {}".format(violation)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class QuadraticExtensionError(Exception):
    """
    Error given when a quadratic extension cannot be built from the data
    """
    def __init__(self, violation: str):
        self.violation = violation
        self.message = "Not a quadratic extension: {}".format(violation)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class ManinPreconditionError(Exception):
    """
    Error given when the data of a Manin pair construction does not meet
    a precondition
    """
    def __init__(self, condition: str):
        self.condition = condition
        self.message = "Manin pair construction: the condition '{}'"\
            " fails".format(condition)
        super().__init__(self.message)
        metriclie_log.error(self.message)
