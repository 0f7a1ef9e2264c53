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


class DocumentParseError(Exception):
    """
    Error given when an algebra document is malformed. The path names the
    offending field, e.g. brackets[3].terms[0]
    """
    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        self.message = "Malformed document at {path}: {reason}"\
            "".format(path=path, reason=reason)
        super().__init__(self.message)
        metriclie_log.error(self.message)


class UnknownCommandError(Exception):
    """
    Error given when the command line is called with an unknown command
    """
    def __init__(self, command: str):
        self.message = "Unknown command {}".format(command)
        super().__init__(self.message)
        metriclie_log.error(self.message)
