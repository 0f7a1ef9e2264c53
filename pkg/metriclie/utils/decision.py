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
"""
Results of checks. Exact checks return a Check (holds + violation),
semi-decisions return a tri-state Decision.
"""
import enum

from typing import Any, Iterable, NamedTuple, Optional

from metriclie.exceptions import warning_formatting


class DecisionKind(enum.Enum):
    """
    Outcome of a semi-decidable check, the value is the exit status of
    the command line front-end

    enumerators:
        YES: 0
        NO: 1
        UNKNOWN: 2
    """
    YES = 0
    NO = 1
    UNKNOWN = 2

    @property
    def exit_code(self) -> int:
        return self.value


class Decision(NamedTuple):
    """
    Tri-state result of a semi-decidable check

    Attributes
    ----------
    kind : DecisionKind
    witness : object
        solution found (Yes) or counterexample (No), may be None
    reason : str
        human readable explanation, always set for Unknown
    """
    kind: DecisionKind
    witness: Any = None
    reason: str = ''

    def __bool__(self):
        return self.kind is DecisionKind.YES

    @property
    def is_yes(self) -> bool:
        return self.kind is DecisionKind.YES

    @property
    def is_no(self) -> bool:
        return self.kind is DecisionKind.NO

    @property
    def is_unknown(self) -> bool:
        return self.kind is DecisionKind.UNKNOWN

    @classmethod
    def yes(cls, witness=None, reason: str = '') -> 'Decision':
        return cls(DecisionKind.YES, witness, reason)

    @classmethod
    def no(cls, witness=None, reason: str = '') -> 'Decision':
        return cls(DecisionKind.NO, witness, reason)

    @classmethod
    def unknown(cls, reason: str, check: Optional[str] = None) -> 'Decision':
        """ Unknown outcome, warned about when the check name is given """
        if check is not None:
            warning_formatting.unknown_decision_warning(check, reason)
        return cls(DecisionKind.UNKNOWN, None, reason)

    @classmethod
    def from_bool(cls, value: bool, witness=None,
                  reason: str = '') -> 'Decision':
        return cls.yes(witness, reason) if value else \
            cls.no(witness, reason)

    @classmethod
    def combine(cls, decisions: Iterable['Decision']) -> 'Decision':
        """
        Conjunction of decisions: No if any is No, Yes if all are Yes,
        otherwise Unknown. The first No (or Unknown) is passed on.
        """
        decisions = list(decisions)
        for decision in decisions:
            if decision.is_no:
                return decision
        for decision in decisions:
            if decision.is_unknown:
                return decision
        return cls.yes()


class Check(NamedTuple):
    """
    Result of an exact check

    Attributes
    ----------
    holds : bool
    violation : object
        first violating data found, None when the check holds
    """
    holds: bool
    violation: Any = None

    def __bool__(self):
        return self.holds

    @classmethod
    def ok(cls) -> 'Check':
        return cls(True, None)

    @classmethod
    def failed(cls, violation) -> 'Check':
        return cls(False, violation)
