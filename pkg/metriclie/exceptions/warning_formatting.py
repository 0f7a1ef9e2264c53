# copyright (C) 2024 metricLie Working Group
# Author(s): metricLie developers
#
# Modifications:
#
# Disclaimer: metricLie is licensed under the LGPL v 3.0 found in LICENSE
#
import warnings


class UnknownDecisionWarning(UserWarning):
    """ Raised when a semi-decision could not be resolved """
    pass


class SimpleIdealWarning(UserWarning):
    """ Raised when ri^perp/ri is not abelian in a canonical extension """
    pass


def unknown_decision_warning(check: str, reason: str):
    """
    Warns that a semi-decidable check ended with Unknown. The result is
    still returned to the caller, this only makes sure that an Unknown is
    never silently treated as No.

    Parameters
    ----------
        check: str
            name of the check that could not decide
        reason: str
            why the implemented search could not decide
    """
    warnings.warn("{check} could not be decided: {reason}"
                  "".format(check=check, reason=reason),
                  UnknownDecisionWarning)


def simple_ideal_warning():
    """
    Warns that the canonical isotropic ideal has a non-abelian quotient
    ri^perp/ri, which happens exactly when simple ideals are present
    """
    warnings.warn("ri(g)^perp/ri(g) is not abelian, the metric Lie algebra"
                  " has simple ideals and the canonical quadratic extension"
                  " is not defined.", SimpleIdealWarning)


def standard_warning_format(message: str, category: str, filename: str,
                            lineno: int, file: str = None,
                            line: int = None) -> str:
    """
    Sets the standard warning message format to be:
        filename: lineno: category: message

    Parameters
    ----------
        message: str
            warning message to be printed to a user
        category: str
            type of the warning message
        filename: str
            name of the associated to the warning message
        lineno : int
            line number where the warning message was raised
        file : str
        line : str

    Returns
    -------
        formatted warning message to be printed to the console
    """
    return "{filename}: {linenum}: {category}:"\
           " {message}\n".format(filename=filename,
                                 linenum=lineno,
                                 category=category.__name__,
                                 message=message)


def only_message_warning_format(message: str, category: str, filename: str,
                                lineno: int, file: str = None,
                                line: int = None) -> str:
    """
    Sets the warning message format to only show the category and the
    message, used by the command line front-end

    Parameters
    ----------
        message: str
            warning message to be printed to a user
        category: str
            type of the warning message
        filename: str
        lineno : int
        file : str
        line : str

    Returns
    -------
        formatted warning message to be printed to the console
    """
    return "{category}: {message}\n"\
        "".format(category=category.__name__, message=message)
