#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Exception hierarchy for the CSF toolkit."""


class CsfError(Exception):
    """Base class for every error raised by the toolkit"""

    exit_code = 1


class UsageError(CsfError):
    """Malformed command line or input document"""

    exit_code = 2


class GraphError(CsfError):
    """Invalid graph or graph operation"""


class MissingEdgeError(GraphError):
    """An edge operation named an edge the graph does not have"""

    def __init__(self, edge):
        super().__init__("edge %s is not in the graph" % (tuple(edge),))
        self.edge = edge


class NotUnicyclicError(GraphError):
    """A connected graph with |E| = |V| was required"""


class GraphFormatError(GraphError, UsageError):
    """Edge list or graph6 text could not be parsed"""

    exit_code = 2


class PartitionError(CsfError):
    """Invalid partition argument"""


class SizeMismatchError(PartitionError):
    """Two partitions of different sizes were compared"""


class NonPositivePartError(PartitionError):
    """A partition entry was zero or negative"""


class NotAHookError(PartitionError):
    """hook_m1 was asked for a partition with two parts above 1"""


class ExpansionError(CsfError):
    """Invalid operation on an expansion"""


class EmptyExpansionError(ExpansionError):
    """The expansion has no nonzero coefficient"""


class CancellationError(ExpansionError):
    """Opposite-signed contributions met on one partition"""


class OracleError(CsfError):
    """The power-sum oracle could not produce an answer"""


class OracleTooLargeError(OracleError):
    """Edge-subset enumeration beyond the configured guard"""


class NonIntegralSolutionError(OracleError):
    """The basis change produced a non-integral or non-unique solution"""


class FormulaDomainError(CsfError):
    """A closed form was evaluated outside its parameter range"""


class InconsistentReportError(CsfError):
    """No structure is consistent with the given expansion"""


class EnumerationRangeError(CsfError):
    """Enumeration parameters outside the supported range"""


class VerificationError(CsfError):
    """A consistency check over computed data failed"""
