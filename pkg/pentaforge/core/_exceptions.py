# Copyright © 2019-2021 HQS Quantum Simulations GmbH. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
# in compliance with the License. You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed under the License
# is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
# or implied. See the License for the specific language governing permissions and limitations under
# the License.
"""Exceptions raised by pentaforge"""

from typing import (
    Any,
    Optional,
    Sequence,
)


class PentaforgeError(Exception):
    """Base class of all errors raised by pentaforge.

    Keyword arguments passed on construction are stored as attributes and
    appended to the string representation, so an error always carries the
    parameters it was raised for.

    """

    def __init__(self,
                 message: str = '',
                 **context: Any) -> None:
        """Initialize the PentaforgeError exception

        Args:
            message: explanation of the error
            context: named values describing where the error occurred
        """
        super().__init__(message)
        self.message = message
        self.context = context
        for key, value in context.items():
            setattr(self, key, value)

    def __str__(self) -> str:
        """Represent the exception as a string

        Returns:
            str
        """
        if not self.context:
            return self.message
        details = ', '.join('{}={}'.format(key, value) for key, value in self.context.items())
        return '{} ({})'.format(self.message, details)


class AdmissibilityError(PentaforgeError):
    """Raised when k does not divide v*r, i.e. r(r - 1) is not divisible by k"""


class ParseError(PentaforgeError):
    """Raised for malformed group types, design files and catalog data"""


class PartitionError(PentaforgeError):
    """Raised when groups overlap or do not cover the point set"""


class SpecError(PentaforgeError):
    """Raised for automorphism specifications that do not act on the point set"""


class ParamError(PentaforgeError):
    """Raised when parameters are inconsistent with each other or with a design"""


class DegenerateError(PentaforgeError):
    """Raised when a difference is requested for a point paired with itself"""


class CensusError(PentaforgeError):
    """Raised when the differences of a construction are not an exact cover.

    Attributes ``uncovered`` and ``duplicated`` list the offending differences.

    """

    def __init__(self,
                 message: str = '',
                 uncovered: Optional[Sequence[Any]] = None,
                 duplicated: Optional[Sequence[Any]] = None) -> None:
        """Initialize the CensusError exception

        Args:
            message: explanation of the error
            uncovered: differences that are not generated at all
            duplicated: differences that are generated more than once
        """
        super().__init__(message,
                         uncovered=list(uncovered or []),
                         duplicated=list(duplicated or []))


class CatalogNotFoundError(PentaforgeError, KeyError):
    """Raised when a catalog id is unknown"""

    def __str__(self) -> str:
        """Represent the exception as a string

        Returns:
            str
        """
        return PentaforgeError.__str__(self)


class DataCorruptionError(PentaforgeError):
    """Raised when a catalog entry does not develop into the design it claims to be"""


class IngredientError(PentaforgeError):
    """Raised when a construction lacks an ingredient design.

    The attribute ``missing`` names the type of the missing design, e.g. ``TD(5,6)``.

    """


class ParameterRangeError(PentaforgeError, ValueError):
    """Raised when a parameter lies outside the range a construction is defined for"""


class ResolutionError(PentaforgeError):
    """Raised when a design expected to be resolvable has no valid resolution"""


class RecipeError(PentaforgeError):
    """Raised when a recipe table row fails its arithmetic check"""


class ConstructionError(PentaforgeError):
    """Raised when the output of a construction fails verification"""
