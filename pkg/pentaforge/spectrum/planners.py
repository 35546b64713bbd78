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
"""Planners for recursive PENT(4) and PENT(5) constructions and the replay of all tables"""

import logging
from math import gcd
from typing import (
    Callable,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Set,
    Tuple,
)
import pandas as pd
from tqdm import tqdm
from pentaforge.core._exceptions import (
    ParamError,
    ParameterRangeError,
    PentaforgeError,
)
from pentaforge.core.gdd_type import GddType
from pentaforge.construct.fields import prime_power
from pentaforge.construct.msets import (
    m10_set,
    m40_set,
    m_set_53,
)
from pentaforge.spectrum.recipes import (
    ingredient_check,
    recipe_check,
)
from pentaforge.spectrum.registry import facts
from pentaforge.spectrum.tables import (
    CONSTRUCTION_TABLE,
    DIRECT_PENT4_BASIC,
    DIRECT_PENT4_EXTRA,
    INGREDIENT_TABLES,
    M10_PUBLISHED,
    M40_PUBLISHED,
    NO_OLP_STRONG,
    RECIPE_TABLES,
    ConstructionRow,
    IngredientRow,
    RecipeRow,
)

logger = logging.getLogger(__name__)

SOracle = Callable[[int], bool]
OlpOracle = Callable[[int, int], bool]


def pent5_no_olp_oracle(s: int) -> bool:
    """Return True when a PENT(5, s) without opposite line pair is known

    Args:
        s: replication number

    Returns:
        bool
    """
    return s >= 1 and facts(5, s, 0).exists


def pent4_oracle(a: int, olps: int) -> bool:
    """Return True when a PENT(4, a) with exactly olps opposite line pairs is known

    Args:
        a: replication number
        olps: number of opposite line pairs

    Returns:
        bool
    """
    return a >= 1 and facts(4, a, olps).exists


def _apply(values: List[int], base: int, oracle: SOracle) -> List[int]:
    result = set()
    for m in values:
        if m < 10 or (m - 6) % 4:
            continue
        s = (m - 6) // 4
        if oracle(s):
            result.add(base + s)
    return sorted(result)


def m40_construction(r0: int, oracle: Optional[SOracle] = None) -> List[int]:
    """Return the r of PENT(5, r) from 40 copies of PENT(5, r0) and a 5-GDD of type (2q)^40 m^1

    q = 2 r0 + 3 and m runs through M40(2, q); the result is r = 40 r0 + (m - 6)/4 + 60 for
    every m where the oracle accepts PENT(5, (m - 6)/4).

    Args:
        r0: replication number of the repeated PENT(5, r0)
        oracle: existence test for PENT(5, s), known no-OLP geometries by default

    Returns:
        List[int]
    """
    oracle = pent5_no_olp_oracle if oracle is None else oracle
    return _apply(sorted(m40_set(2, 2 * r0 + 3)), 40 * r0 + 60, oracle)


def m10_construction(r0: int, oracle: Optional[SOracle] = None) -> List[int]:
    """Return the r of PENT(5, r) from 10 copies of PENT(5, r0) and a 5-GDD of type (10q)^10 m^1

    q = (4 r0 + 6)/10 and m runs through M10(10, q); the result is
    r = 10 r0 + (m - 6)/4 + 15.

    Args:
        r0: replication number of the repeated PENT(5, r0)
        oracle: existence test for PENT(5, s), known no-OLP geometries by default

    Returns:
        List[int]

    Raises:
        ParameterRangeError: 4 r0 + 6 is not divisible by 10
    """
    if (4 * r0 + 6) % 10:
        raise ParameterRangeError('4 r0 + 6 must be divisible by 10', r0=r0)
    oracle = pent5_no_olp_oracle if oracle is None else oracle
    return _apply(sorted(m10_set(10, (4 * r0 + 6) // 10)), 10 * r0 + 15, oracle)


def td_construction_conditions(g: int, u: int, q: int) -> List[str]:
    """Return the conditions on (g, u, q) the TD construction violates

    Args:
        g: base group size
        u: number of groups of size gq
        q: side of the u - 1 MOLS

    Returns:
        List[str]: empty when every condition holds
    """
    failed = []
    if u < 6 or u % 2:
        failed.append('u >= 6 and even')
    if (g * u) % 4:
        failed.append('gu = 0 mod 4')
    if (g * (u - 1)) % 3:
        failed.append('g(u - 1) = 0 mod 3')
    if (g * g * (u + 1) * u) % 20:
        failed.append('g^2 (u + 1) u = 0 mod 20')
    if (g * q) % 20 not in (6, 10):
        failed.append('gq = 6 or 10 mod 20')
    try:
        prime_power(q)
        if u - 1 > q - 1:
            failed.append('u - 1 MOLS of side q')
    except ParamError:
        failed.append('q is a prime power')
    return failed


def plan_construction53(g: int,
                         u: int,
                         q: int,
                         r0: Optional[int] = None,
                         existence_oracle: Optional[SOracle] = None) -> List[int]:
    """Return the r of PENT(5, r) from a 5-GDD of type (gq)^u m^1 with m in M

    M = {jd + (q - j)g : j = 0..q} with d = g(u - 1)/3. Overlaying u copies of PENT(5, r0),
    r0 = (gq - 6)/4, and one PENT(5, s), s = (m - 6)/4, gives PENT(5, u r0 + s + 3u/2).

    Args:
        g: base group size
        u: number of groups of size gq
        q: prime power side of the MOLS
        r0: expected (gq - 6)/4, checked when given
        existence_oracle: existence test for PENT(5, s), known no-OLP geometries by default

    Returns:
        List[int]

    Raises:
        ParameterRangeError: a condition of the construction fails or r0 does not match
    """
    failed = td_construction_conditions(g, u, q)
    if failed:
        raise ParameterRangeError('TD construction conditions fail', g=g, u=u, q=q,
                                  failed=failed)
    expected = (g * q - 6) // 4
    if r0 is not None and r0 != expected:
        raise ParameterRangeError('r0 must be (gq - 6)/4', r0=r0, expected=expected)
    oracle = pent5_no_olp_oracle if existence_oracle is None else existence_oracle
    return _apply(sorted(m_set_53(g, u, q)), u * expected + 3 * u // 2, oracle)


class JolpPlan(NamedTuple):
    """PENT(4, 44w + s) with exactly j opposite line pairs.

    The PENT(4, s) overlays 12t + 1 - j copies of a PENT(4, a) without opposite line pair and
    j copies of a PENT(4, a) with one on a 4-GDD of type (3a + 5)^{12t + 1}.
    """

    j: int
    residue: int
    t: int
    a: int
    s: int

    @property
    def gdd_type(self) -> GddType:
        """Type of the 4-GDD building the PENT(4, s)

        Returns:
            GddType
        """
        return GddType([(3 * self.a + 5, 12 * self.t + 1)])

    def r(self, w: int) -> int:
        """Return 44w + s

        Args:
            w: number of PENT(4, 13) triples

        Returns:
            int
        """
        return 44 * w + self.s

    def __str__(self) -> str:
        """Return string representation of the plan

        Returns:
            str
        """
        return 'j={} residue={}: t={} a={} s={} type {}'.format(
            self.j, self.residue, self.t, self.a, self.s, self.gdd_type)


def jolp_t_values(j: int, t_max: int) -> List[int]:
    """Return the t in 1..t_max with 12t + 1 >= j and gcd(12t + 1, 44) = 1

    Args:
        j: number of opposite line pairs
        t_max: largest t

    Returns:
        List[int]
    """
    return [t for t in range(1, t_max + 1) if 12 * t + 1 >= j and gcd(12 * t + 1, 44) == 1]


def plan_jolp(j: int,
              residue: int,
              oracle: Optional[OlpOracle] = None,
              t_max: int = 100,
              a_max: int = 20000) -> Optional[JolpPlan]:
    """Find the smallest (t, a) for a PENT(4, r), r = residue mod 44, with j opposite line pairs

    The conditions are t >= 1, 12t + 1 >= j, gcd(12t + 1, 44) = 1,
    (12t + 1)a + 20t = residue mod 44 and the existence of PENT(4, a) without and with one
    opposite line pair as far as they are used.

    Args:
        j: number of opposite line pairs
        residue: admissible residue mod 44
        oracle: existence test oracle(a, olps), the registry by default
        t_max: largest t tried
        a_max: largest a tried

    Returns:
        Optional[JolpPlan]: None when nothing is found within the bounds

    Raises:
        ParameterRangeError: j < 0 or residue is not admissible mod 44
    """
    if j < 0 or not 0 <= residue < 44 or residue % 4 not in (0, 1):
        raise ParameterRangeError('Needs j >= 0 and an admissible residue mod 44',
                                  j=j, residue=residue)
    oracle = pent4_oracle if oracle is None else oracle
    for t in jolp_t_values(j, t_max):
        n = 12 * t + 1
        inverse = next(x for x in range(44) if (n * x) % 44 == 1)
        a = ((residue - 20 * t) * inverse) % 44 or 44
        while a <= a_max:
            if (n == j or oracle(a, 0)) and (j == 0 or oracle(a, 1)):
                plan = JolpPlan(j, residue, t, a, n * a + 20 * t)
                logger.debug('Found %s', plan)
                return plan
            a += 44
    return None


_Check = Callable[[], Tuple[bool, str]]


def _accept(s: int) -> bool:
    return True


def _missing_detail(listed: Iterable[int], found: Iterable[int]) -> Tuple[bool, str]:
    missing = sorted(set(listed) - set(found))
    if missing:
        return False, 'missing {}'.format(missing)
    return True, '{} values'.format(len(set(listed)))


def _recipe_job(row: RecipeRow) -> _Check:
    def job() -> Tuple[bool, str]:
        check = recipe_check(row)
        return True, 'r = 44t + {}, t >= {}, {}'.format(check.residue, check.t_min,
                                                       check.gdd_type)
    return job


def _ingredient_job(row: IngredientRow, available: Set[int]) -> _Check:
    def job() -> Tuple[bool, str]:
        return True, str(ingredient_check(row, available))
    return job


def _td_job(row: ConstructionRow) -> _Check:
    def job() -> Tuple[bool, str]:
        return _missing_detail(row.values,
                               plan_construction53(row.g, row.u, row.q, r0=row.r0,
                                                   existence_oracle=_accept))
    return job


def _published_job(construction: Callable[..., List[int]], r0: int,
                   values: Tuple[int, ...]) -> _Check:
    def job() -> Tuple[bool, str]:
        return _missing_detail(values, construction(r0, oracle=_accept))
    return job


def _replay_jobs() -> List[Tuple[str, str, _Check]]:
    jobs = [(name, str(row.residue), _recipe_job(row))
            for name, rows in RECIPE_TABLES.items() for row in rows]
    strong = set(row.s for row in NO_OLP_STRONG) | set(DIRECT_PENT4_EXTRA)
    available = {'weak-ingredients': set(DIRECT_PENT4_BASIC),
                 'missing-values': strong,
                 'one-olp-ingredients': strong}
    jobs += [(name, str(row.r), _ingredient_job(row, available[name]))
             for name, rows in INGREDIENT_TABLES.items() for row in rows]
    jobs += [('td-construction', '{} {} {} {}'.format(row.g, row.u, row.q, row.r0), _td_job(row))
             for row in CONSTRUCTION_TABLE]
    jobs += [('m40', str(r0), _published_job(m40_construction, r0, values))
             for r0, values in M40_PUBLISHED.items()]
    jobs += [('m10', str(r0), _published_job(m10_construction, r0, values))
             for r0, values in M10_PUBLISHED.items()]
    return jobs


def replay_tables(verbose: bool = False) -> pd.DataFrame:
    """Replay the arithmetic of every recipe, ingredient and construction table

    Args:
        verbose: show a progress bar on standard error

    Returns:
        pd.DataFrame: columns table, row, passed, detail
    """
    rows = []
    for table, key, job in tqdm(_replay_jobs(), disable=not verbose, desc='replay'):
        try:
            passed, detail = job()
        except PentaforgeError as error:
            passed, detail = False, str(error)
        rows.append({'table': table, 'row': key, 'passed': passed, 'detail': detail})
    frame = pd.DataFrame(rows, columns=['table', 'row', 'passed', 'detail'])
    logger.info('Replayed %d table rows, %d failed', len(frame), int((~frame['passed']).sum()))
    return frame
