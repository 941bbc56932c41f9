#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Documentos JSON (validados com pydantic) e DOT para grafos, mapas,
especificações de oráculo, estados da construção e prefixos g_s.
"""

import json
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, TypeAdapter, ValidationError

from domain.construction import (
    Branch,
    BranchSpec,
    ConstructionState,
    GoodPair,
    Label,
    PairStatus,
    PartialHom,
    TsTree,
    pair_index,
)
from domain.exceptions import GraphParseError, InvalidInputError, OracleSpecError
from domain.graphs import Graph
from domain.homomorphisms import VertexMap
from domain.oracles import (
    DEFAULT_CAP,
    GraphOracle,
    WitnessBudget,
    rado_oracle,
    random_bipartite_oracle,
    random_h_colourable_oracle,
)

GRAPH_FORMATS = ("json", "dot")


class GraphDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: StrictInt = Field(ge=0)
    edges: List[Tuple[StrictInt, StrictInt]] = Field(default_factory=list)
    names: Optional[List[str]] = None


class MapDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    image: List[StrictInt] = Field(alias="map")


class RadoSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["rado-bit"]


class RandomBipartiteSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["random-bipartite"]
    seed: StrictInt = Field(ge=0, lt=2 ** 64)
    density_bits: StrictInt = Field(default=1, ge=1)


class RandomHColourableSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["random-h-colourable"]
    seed: StrictInt = Field(ge=0, lt=2 ** 64)
    h: GraphDocument
    density_bits: StrictInt = Field(default=1, ge=1)


OracleSpec = Annotated[
    Union[RadoSpec, RandomBipartiteSpec, RandomHColourableSpec],
    Field(discriminator="kind"),
]
_ORACLE_ADAPTER = TypeAdapter(OracleSpec)


class BranchDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    length: StrictInt = Field(alias="len", ge=1)
    vertices: List[StrictInt]


class GoodPairDocument(BaseModel):
    pair: Tuple[StrictInt, StrictInt]
    witness: StrictInt


class StateDocument(BaseModel):
    t: StrictInt = Field(ge=1)
    root: StrictInt = Field(ge=0)
    branches: List[BranchDocument] = Field(default_factory=list)
    good_pairs: List[GoodPairDocument]
    bad_vertices: List[StrictInt]
    oracle: Dict[str, Any]
    s: str
    cursor: Optional[StrictInt] = None
    cap: Optional[StrictInt] = None


def _dump(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _load_json(data: Union[str, bytes], what: str) -> Any:
    try:
        return json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise GraphParseError(f"{what}: JSON inválido ({e})")


def graph_from_document(document: Any) -> Graph:
    try:
        doc = GraphDocument.model_validate(document)
    except ValidationError as e:
        raise GraphParseError(f"Documento de grafo inválido: {e.errors()[0]['msg']}", e.errors()[0].get("loc"))
    seen = set()
    for entry in doc.edges:
        u, v = entry
        if u == v:
            raise GraphParseError("Laço não permitido", list(entry))
        if not (0 <= u < doc.n and 0 <= v < doc.n):
            raise GraphParseError("Extremo fora do intervalo 0..n-1", list(entry))
        if u > v:
            raise GraphParseError("Arestas são armazenadas com u < v", list(entry))
        if entry in seen:
            raise GraphParseError("Aresta duplicada", list(entry))
        seen.add(entry)
    if doc.names is not None and len(doc.names) != doc.n:
        raise GraphParseError(f"names precisa ter {doc.n} entradas", doc.names)
    return Graph.from_edges(doc.n, doc.edges, doc.names)


def graph_to_document(g: Graph) -> Dict[str, Any]:
    document: Dict[str, Any] = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.names is not None:
        document["names"] = list(g.names)
    return document


def parse_graph(data: Union[str, bytes]) -> Graph:
    """Lê um grafo no esquema JSON {"n", "edges", "names"?}."""
    return graph_from_document(_load_json(data, "Grafo"))


def emit_graph(g: Graph, fmt: str = "json") -> str:
    """Serializa um grafo em JSON ou DOT (arestas ordenadas por (u, v))."""
    if fmt == "json":
        return _dump(graph_to_document(g))
    if fmt == "dot":
        lines = ["graph G {"]
        for v in g.vertices():
            if g.names is not None:
                lines.append(f"  {v} [label={json.dumps(g.names[v], ensure_ascii=False)}];")
            else:
                lines.append(f"  {v};")
        lines.extend(f"  {u} -- {v};" for u, v in g.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise InvalidInputError(f"Formato desconhecido: {fmt} (use json ou dot)")


def parse_map(data: Union[str, bytes], domain: Graph, codomain: Graph) -> VertexMap:
    """Lê {"map": [...]} e associa ao domínio e contradomínio dados."""
    try:
        doc = MapDocument.model_validate(_load_json(data, "Mapa"))
    except ValidationError as e:
        raise GraphParseError(f"Documento de mapa inválido: {e.errors()[0]['msg']}")
    return VertexMap(domain, codomain, tuple(doc.image))


def emit_map(f: VertexMap) -> str:
    return _dump({"map": list(f.image)})


def oracle_from_spec(document: Any) -> GraphOracle:
    """Constrói o oráculo descrito por uma especificação JSON."""
    try:
        spec = _ORACLE_ADAPTER.validate_python(document)
    except ValidationError as e:
        raise OracleSpecError(f"Especificação de oráculo inválida: {e.errors()[0]['msg']}")
    if isinstance(spec, RadoSpec):
        return rado_oracle()
    if isinstance(spec, RandomBipartiteSpec):
        return random_bipartite_oracle(spec.seed, spec.density_bits)
    try:
        h = graph_from_document(spec.h.model_dump(exclude_none=True))
        return random_h_colourable_oracle(h, spec.seed, spec.density_bits)
    except InvalidInputError as e:
        raise OracleSpecError(f"Especificação de oráculo inválida: {e}")


def parse_oracle(data: Union[str, bytes]) -> GraphOracle:
    document = _load_json(data, "Oráculo")
    return oracle_from_spec(document)


def state_to_document(state: ConstructionState) -> Dict[str, Any]:
    return {
        "t": state.t,
        "root": state.tree.root,
        "branches": [{"len": br.length, "vertices": list(br.vertices)} for br in state.tree.branches],
        "good_pairs": [{"pair": [gp.x, gp.y], "witness": gp.witness} for gp in state.good_pairs],
        "bad_vertices": sorted(state.status.poisoned),
        "oracle": state.oracle.spec(),
        "s": str(state.spec),
        "cursor": state.cursor,
        "cap": state.budget.cap,
    }


def emit_state(state: ConstructionState) -> str:
    return _dump(state_to_document(state))


def state_from_document(document: Any) -> ConstructionState:
    """Reconstrói o estado (e o oráculo a partir da especificação embutida)."""
    try:
        doc = StateDocument.model_validate(document)
    except ValidationError as e:
        raise InvalidInputError(f"Documento de estado inválido: {e.errors()[0]['msg']}")
    good_pairs = tuple(GoodPair(min(gp.pair), max(gp.pair), gp.witness) for gp in doc.good_pairs)
    cursor = doc.cursor
    if cursor is None:
        cursor = max((pair_index(gp.x, gp.y) for gp in good_pairs), default=doc.t)
    return ConstructionState(
        oracle=oracle_from_spec(doc.oracle),
        spec=BranchSpec.parse(doc.s),
        budget=WitnessBudget(doc.cap or DEFAULT_CAP),
        t=doc.t,
        tree=TsTree(doc.root, tuple(Branch(br.length, tuple(br.vertices)) for br in doc.branches)),
        status=PairStatus(
            poisoned=frozenset(doc.bad_vertices),
            processed_good=frozenset(gp.pair for gp in good_pairs),
        ),
        good_pairs=good_pairs,
        cursor=cursor,
    )


def parse_state(data: Union[str, bytes]) -> ConstructionState:
    return state_from_document(_load_json(data, "Estado"))


def emit_partial_hom(gs: PartialHom) -> str:
    return _dump(gs.to_dict())


def partial_hom_from_document(document: Any, h: Graph) -> PartialHom:
    try:
        entries = document["assignments"]
        assignments = {int(v): Label.parse(str(label)) for v, label in entries}
    except (KeyError, TypeError, ValueError) as e:
        raise GraphParseError(f"Documento de g_s inválido: {e}")
    return PartialHom(assignments, h)


def emit_json(document: Any) -> str:
    return _dump(document)
