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


class RationalParseError(Exception):
    """
    Error given when a value cannot be read as an exact rational number
    """
    def __init__(self, value):
        self.value = value
        self.message = "The value {} is not an exact rational number. "\
            "Rationals are written as integers or as 'p/q' with q "\
            "nonzero.".format(repr(value))
        super().__init__(self.message)
        metriclie_log.error(self.message)


class DimensionMismatchError(Exception):
    """
    Error given when the shapes of matrices, vectors or structures
    do not fit together
    """
    def __init__(self, what: str, expected, given):
        self.message = "Dimension mismatch for {what}: expected {exp} but"\
            " was given {given}".format(what=what, exp=expected,
                                        given=given)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class FormNotSymmetricError(Exception):
    """
    Error given when a bilinear form matrix is not square and symmetric
    """
    def __init__(self, i: int, j: int):
        self.message = "The form matrix is not symmetric: entry ({i},{j})"\
            " differs from entry ({j},{i})".format(i=i, j=j)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class AntisymmetryError(Exception):
    """
    Error given when structure constants are stored for both (i, j) and
    (j, i) with inconsistent values or a bracket [e_i, e_i] is nonzero
    """
    def __init__(self, i: int, j: int):
        self.message = "Structure constants are not antisymmetric in the"\
            " pair ({i},{j})".format(i=i, j=j)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class JacobiIdentityError(Exception):
    """
    Error given when a constructed algebra violates the Jacobi identity
    """
    def __init__(self, name: str, triple: tuple):
        self.triple = triple
        self.message = "The Jacobi identity fails for {name} on the basis"\
            " triple {triple}".format(name=name, triple=triple)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class NotMetricError(Exception):
    """
    Error given when a form is degenerate or not ad-invariant
    """
    def __init__(self, name: str, violation: str):
        self.violation = violation
        self.message = "{name} is not a metric Lie algebra: {violation}"\
            "".format(name=name, violation=violation)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class NotDerivationError(Exception):
    """
    Error given when a linear map is required to be a (antisymmetric)
    derivation but is not
    """
    def __init__(self, name: str, violation: str):
        self.violation = violation
        self.message = "The map {name} is not a valid derivation:"\
            " {violation}".format(name=name, violation=violation)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class NotIsometryError(Exception):
    """
    Error given when a map is required to preserve a bilinear form
    """
    def __init__(self, name: str):
        self.message = "The map {name} does not preserve the metric"\
            "".format(name=name)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class NotInvolutionError(Exception):
    """
    Error given when a map is required to square to the identity
    """
    def __init__(self, name: str):
        self.message = "The map {name} is not an involution (its square"\
            " is not the identity)".format(name=name)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class GradingRelationError(Exception):
    """
    Error given when the generators of an equivariant structure violate a
    relation required by their grading preset
    """
    def __init__(self, kind: str, relation: str):
        self.relation = relation
        self.message = "The generators do not form a {kind} grading: the"\
            " relation {rel} fails".format(kind=kind, rel=relation)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class ModuleNotSemisimpleError(Exception):
    """
    Error given when an operation needs a semisimple module
    """
    def __init__(self, reason: str):
        self.message = "The module is not semisimple: {}".format(reason)
        super().__init__(self.message)
        metriclie_log.error(self.message)
