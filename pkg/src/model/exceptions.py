# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from typing import Any, Optional


class HybridSizerException(Exception):
    """
    Base exception class for all domain errors.
    """

    def __init__(self, message: str = "exception occurred", context: Any = None) -> None:
        """
        Initiation method for the exception.
        :param message: Message to include in exception.
        :param context: Context object that caused the exception.
            Defaults to None.
        """
        self.message = message
        self.context = context
        super().__init__(self.message)

    def __str__(self) -> str:
        """
        Method for encoding exception as string.
        :return: Exception string.
        """
        return self.message if self.context is None else f"{self.message} : {self.context}"


class TimeSeriesException(HybridSizerException):
    """
    TimeSeriesException class.
    """

    def __init__(self, message: str = "invalid hourly time series", line: Optional[int] = None,
                 context: Any = None) -> None:
        """
        Initiation method for the exception.
        :param message: Message to include in exception.
        :param line: Data line number the error refers to, counted from 1.
            Defaults to None for errors without a line.
        :param context: Offending value or quantity.
        """
        self.line = line
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message, context)


class ResourceException(HybridSizerException):
    """
    ResourceException class, raised on synthesis and scaling precondition failures.
    """
    pass


class NetworkDisabledException(HybridSizerException):
    """
    NetworkDisabledException class, raised if a network request is issued in offline mode.
    """

    def __init__(self, message: str = "offline mode: network access is disabled, pass --allow-network",
                 context: Any = None) -> None:
        """
        Initiation method for the exception.
        :param message: Message to include in exception.
        :param context: Requested resource.
        """
        super().__init__(message, context)


class NasaPowerException(HybridSizerException):
    """
    NasaPowerException class.
    """
    pass


class NasaPowerConnectionException(NasaPowerException):
    """
    Raised if the NASA POWER service cannot be reached.
    """
    pass


class NasaPowerStatusException(NasaPowerException):
    """
    Raised if the NASA POWER service answers with a non-success status.
    """

    def __init__(self, status_code: int, message: str = "NASA POWER request failed", context: Any = None) -> None:
        """
        Initiation method for the exception.
        :param status_code: HTTP status code.
        :param message: Message to include in exception.
        :param context: Request URL.
        """
        self.status_code = status_code
        super().__init__(f"{message} with status {status_code}", context)


class NasaPowerPayloadException(NasaPowerException):
    """
    Raised if a NASA POWER response lacks an expected field.
    """

    def __init__(self, field: str, message: str = "NASA POWER response is missing field") -> None:
        """
        Initiation method for the exception.
        :param field: Missing field path.
        :param message: Message to include in exception.
        """
        self.field = field
        super().__init__(f"{message} '{field}'")


class ComponentSpecException(HybridSizerException):
    """
    ComponentSpecException class, raised on violated component parameter invariants.
    """
    pass


class BatteryStateException(HybridSizerException):
    """
    BatteryStateException class, raised if a battery state lies outside of the SOC window.
    """
    pass


class DispatchException(HybridSizerException):
    """
    DispatchException class.
    """
    pass


class EconomicsException(HybridSizerException):
    """
    EconomicsException class.
    """
    pass


class EmissionsException(HybridSizerException):
    """
    EmissionsException class, raised on negative activity.
    """
    pass


class SearchSpaceException(HybridSizerException):
    """
    SearchSpaceException class.
    """

    def __init__(self, dimension: str, message: str = "invalid search space dimension") -> None:
        """
        Initiation method for the exception.
        :param dimension: Name of the offending dimension.
        :param message: Message to include in exception.
        """
        self.dimension = dimension
        super().__init__(message, dimension)


class NoFeasibleCandidateException(HybridSizerException):
    """
    NoFeasibleCandidateException class.
    """

    def __init__(self, statistics: dict, message: str = "no feasible candidate") -> None:
        """
        Initiation method for the exception.
        :param statistics: Binding constraint statistics over all evaluated candidates.
        :param message: Message to include in exception.
        """
        self.statistics = statistics
        super().__init__(message, statistics)


class ConfigurationException(HybridSizerException):
    """
    ConfigurationException class.
    """

    def __init__(self, field: str, message: str = "invalid configuration") -> None:
        """
        Initiation method for the exception.
        :param field: Dotted path of the offending field.
        :param message: Message to include in exception.
        """
        self.field = field
        super().__init__(message, field)


class ReportException(HybridSizerException):
    """
    ReportException class, raised if a report file cannot be written.
    """

    def __init__(self, path: str, message: str = "failed to write report") -> None:
        """
        Initiation method for the exception.
        :param path: Offending path.
        :param message: Message to include in exception.
        """
        self.path = path
        super().__init__(message, path)
