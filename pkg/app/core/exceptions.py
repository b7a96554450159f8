"""
Error hierarchy shared by every computational app.

Each error carries the exit code the command line returns for it.
"""


class ComputationError(Exception):
    """ Base class for every domain error """
    exit_code = 2

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class SizeLimitError(ComputationError):
    """ Enumeration asked beyond its hard cap """


class DomainError(ComputationError):
    """ Argument outside the domain of the operation """


class OrderError(DomainError):
    """ Lattice interval whose endpoints are not ordered """


class ConnectivityError(DomainError):
    """ Operation defined for connected graphs only """


class ClassError(DomainError):
    """ Graph outside the required class """


class CoincidenceError(DomainError):
    """ Points expected pairwise distinct """


class BranchError(DomainError):
    """ Resolvent evaluated off its real branch """


class IncompleteTableError(ComputationError):
    """ Moment, cumulant or kernel missing from a table """


class ModelError(ComputationError):
    """ Probability model that is not normalised """


class ConfigError(ComputationError):
    """ Run configuration that fails validation """

    def __init__(self, message, errors=None):
        super().__init__(message, errors=errors or {})
        self.errors = errors or {}


class InputError(ComputationError):
    """ Unreadable or malformed input file """

    def __init__(self, message, path=None, line=None):
        super().__init__(message, path=path, line=line)
        self.path = path
        self.line = line


class EdgeError(ComputationError):
    """ Root pushed against the singular edge of the resolvent """
    exit_code = 3


class IterationLimitError(ComputationError):
    """ Iterative solver that did not converge """
    exit_code = 3

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message, residual=residual, iterations=iterations)
        self.residual = residual
        self.iterations = iterations


class SolverError(ComputationError):
    """ Shooting or bracketing failure """
    exit_code = 3
