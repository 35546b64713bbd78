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
"""Deficiency graphs: construction, girth and component classification"""

import logging
from math import isinf
from typing import (
    Any,
    Dict,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)
import networkx as nx
import numpy as np
from hqsbase.qonfig import Qonfig
from pentaforge.core.design import Design
from pentaforge.verify.pairs import collinearity

logger = logging.getLogger(__name__)


def deficiency_graph(design: Design) -> nx.Graph:
    """Return the graph on 0..v-1 whose edges are the non-collinear pairs

    Args:
        design: the design

    Returns:
        nx.Graph
    """
    collinear = collinearity(design)
    rows, cols = np.nonzero(np.triu(~collinear, 1))
    graph = nx.Graph()
    graph.add_nodes_from(range(design.v))
    graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
    return graph


def girth(graph: nx.Graph) -> Union[int, float]:
    """Return the length of a shortest cycle, math.inf for a forest

    Args:
        graph: simple undirected graph

    Returns:
        Union[int, float]
    """
    return nx.girth(graph)


class Component(NamedTuple):
    """A connected component and whether it is a complete bipartite K_{k,k}"""

    vertices: Tuple[int, ...]
    is_kkk: bool


def is_complete_bipartite(graph: nx.Graph, k: int) -> bool:
    """Return True when the connected graph is K_{k,k}

    Args:
        graph: connected graph
        k: side size

    Returns:
        bool
    """
    if graph.number_of_nodes() != 2 * k or graph.number_of_edges() != k * k:
        return False
    if not nx.is_bipartite(graph):
        return False
    left, right = nx.bipartite.sets(graph)
    return len(left) == k and len(right) == k


def classify_components(graph: nx.Graph, k: int) -> List[Component]:
    """Return the connected components with their K_{k,k} flags, ordered by least vertex

    Args:
        graph: simple undirected graph
        k: block size

    Returns:
        List[Component]
    """
    components = []
    for vertices in nx.connected_components(graph):
        flag = is_complete_bipartite(graph.subgraph(vertices), k)
        components.append(Component(tuple(sorted(vertices)), flag))
    components.sort(key=lambda component: component.vertices[0])
    return components


class DeficiencyReport(object):
    """Regularity, girth and component structure of a deficiency graph.

    ``degree`` is None when the graph is not regular and ``girth`` is None when it has no cycle.

    """

    _qonfig_defaults_dict = {
        'degree': {'doc': 'Common vertex degree, None if irregular',
                   'default': None},
        'girth': {'doc': 'Length of a shortest cycle, None if acyclic',
                  'default': None},
        'components': {'doc': 'List of [vertex list, is K_{k,k}] pairs',
                       'default': None},
    }
    _qonfig_never_receives_values = True

    def __init__(self,
                 degree: Optional[int],
                 girth: Optional[int],
                 components: Sequence[Sequence[Any]]) -> None:
        """Initialize the report

        Args:
            degree: common degree or None
            girth: girth or None for an acyclic graph
            components: Component tuples or [vertices, flag] pairs
        """
        self.degree = degree
        self.girth = girth
        self.components = [Component(tuple(int(x) for x in vertices), bool(flag))
                           for vertices, flag in components]

    @classmethod
    def from_graph(cls, graph: nx.Graph, k: int) -> 'DeficiencyReport':
        """Analyse a deficiency graph

        Args:
            graph: the deficiency graph
            k: block size

        Returns:
            DeficiencyReport
        """
        degrees = {degree for _, degree in graph.degree()}
        degree = degrees.pop() if len(degrees) == 1 else None
        length = girth(graph)
        return cls(degree=degree,
                   girth=None if isinf(length) else int(length),
                   components=classify_components(graph, k))

    @classmethod
    def from_qonfig(cls,
                    config: Qonfig['DeficiencyReport']
                    ) -> 'DeficiencyReport':
        """Create an Instance from Qonfig

        Args:
            config: Qonfig of class

        Returns:
            DeficiencyReport
        """
        return cls(degree=config['degree'], girth=config['girth'],
                   components=config['components'])

    def to_qonfig(self) -> 'Qonfig[DeficiencyReport]':
        """Create a Qonfig from Instance

        Returns:
            Qonfig[DeficiencyReport]
        """
        config = Qonfig(self.__class__)
        config['degree'] = self.degree
        config['girth'] = self.girth
        config['components'] = [[list(c.vertices), c.is_kkk] for c in self.components]
        return config

    @property
    def olp_count(self) -> int:
        """Number of K_{k,k} components

        Returns:
            int
        """
        return sum(1 for component in self.components if component.is_kkk)

    @property
    def connected(self) -> bool:
        """True when the graph has exactly one component

        Returns:
            bool
        """
        return len(self.components) == 1

    def to_dict(self) -> Dict[str, Any]:
        """Return the summary used in verification reports

        Returns:
            Dict[str, Any]
        """
        return {'degree': self.degree,
                'girth': self.girth,
                'connected': self.connected,
                'olp_count': self.olp_count,
                'component_count': len(self.components)}

    def __str__(self) -> str:
        """Return string representation of the report

        Returns:
            str
        """
        return ('degree {} girth {} components {} olp {}'.format(
            'irregular' if self.degree is None else self.degree,
            'inf' if self.girth is None else self.girth,
            len(self.components), self.olp_count))
