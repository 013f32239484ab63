"""
Text formats: graph specs, edge lists, homology tables, matrix and matching dumps
"""

import csv
import io
import json
import logging
import re
from pathlib import Path

from .errors import GraphError
from .graphs import build_graph, named_graph
from .homology import HomologyTable
from .matrices import SparseIntegerMatrix

logger = logging.getLogger(__name__)


# =============================================================================
# Graph specs and edge lists
# =============================================================================

def _split_top_level(text):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif ch == ',' and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _parse_edges(text):
    edges = []
    for token in re.split(r'[;,]', text):
        token = token.strip()
        if not token:
            continue
        match = re.fullmatch(r'(\d+)-(\d+)', token)
        if not match:
            raise GraphError(f"bad edge '{token}' (expected u-v)")
        edges.append((int(match.group(1)), int(match.group(2))))
    return edges


def parse_graph_spec(spec):
    """
    Build a graph from a command-line spec.

    Grammar:
        name                      icosahedron, rook44, shrikhande, dodecahedron,
                                  desargues, block3, nonmorse, fan
        name:n                    path:4, cycle:5, complete:3, star:3, fan:3
        tree:0-1,1-2              edge list, ';' also separates edges
        join(spec,spec)           G * H
        complement(spec)
        file:<path>               edge-list file

    Raises:
        GraphError: malformed spec or invalid graph
    """
    spec = spec.strip()
    match = re.fullmatch(r'(join|complement)\((.*)\)', spec)
    if match:
        args = [parse_graph_spec(part) for part in _split_top_level(match.group(2))]
        return named_graph(match.group(1), *args)
    name, _, param = spec.partition(':')
    if name == 'file':
        return read_edge_list(param)
    if name == 'tree':
        return named_graph('tree', _parse_edges(param))
    params = [p for p in param.split(',') if p] if param else []
    return named_graph(name, *params)


def read_edge_list(path):
    """
    Read an edge-list file: a header `n <count>`, then one `u v` pair per
    line. Blank lines and `#` comments are ignored.
    """
    path = Path(path)
    if not path.exists():
        raise GraphError(f"edge-list file not found: {path}")
    n = None
    edges = []
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == 'n' and len(fields) == 2 and n is None:
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise GraphError(f"{path}:{lineno}: expected 'u v', got '{raw.strip()}'")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphError(f"{path}:{lineno}: vertex ids must be integers")
    if n is None:
        raise GraphError(f"{path}: missing 'n <count>' header")
    return build_graph(n, edges, name=path.stem)


def write_edge_list(graph, path):
    lines = [f"# {graph.name}", f"n {graph.vertex_count}"]
    lines += [f"{u} {v}" for u, v in graph.edges()]
    Path(path).write_text("\n".join(lines) + "\n")


# =============================================================================
# Homology tables
# =============================================================================

def table_to_json(table):
    return json.dumps(table.to_dict(), indent=2)


def table_from_json(text):
    return HomologyTable.from_dict(json.loads(text))


def table_to_csv(table):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(['k', 'l', 'rank', 'torsion'])
    for entry in table.to_dict()['entries']:
        writer.writerow([entry['k'], entry['l'], entry['rank'], ' '.join(map(str, entry['torsion']))])
    return buffer.getvalue()


def format_table_pretty(table):
    """Rows are l, columns are k; blank below the diagonal k <= l, '.' for zero."""
    header = ["l\\k"] + [str(k) for k in range(table.lmax + 1)]
    rows = [header]
    for l in range(table.lmax + 1):
        row = [str(l)]
        for k in range(table.lmax + 1):
            if k > l:
                row.append("")
                continue
            group = table.group(k, l)
            if group.is_zero():
                row.append(".")
            elif group.torsion:
                row.append(str(group))
            else:
                row.append(str(group.rank))
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = [f"{table.graph}  [{table.method}]"]
    for r in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def render_table(table, fmt):
    if fmt == 'json':
        return table_to_json(table)
    if fmt == 'csv':
        return table_to_csv(table)
    return format_table_pretty(table)


# =============================================================================
# Matrices and matchings
# =============================================================================

def write_matrix_dump(matrix, k, l, path):
    """Header `k l rows cols`, then one `row col value` triple per line."""
    lines = [f"{k} {l} {matrix.rows} {matrix.cols}"]
    lines += [f"{r} {c} {v}" for r, c, v in matrix.triples()]
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix_dump(path):
    """Returns (k, l, SparseIntegerMatrix)."""
    lines = [line for line in Path(path).read_text().splitlines() if line.strip()]
    k, l, rows, cols = (int(x) for x in lines[0].split())
    triples = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    return k, l, SparseIntegerMatrix.from_triples(rows, cols, triples)


def format_sequence(sequence, graph=None):
    if graph is None:
        return "(" + ",".join(str(v) for v in sequence) + ")"
    return "(" + ",".join(graph.label(v) for v in sequence) + ")"


def format_matching(complex_, matching, graph=None):
    """One `(lower) <-> (upper)` line per matched pair, by layer then position."""
    lines = []
    for k in sorted(matching.pairs):
        for lower, upper in sorted(matching.pairs[k]):
            lines.append(f"{format_sequence(complex_.label(k - 1, lower), graph)} <-> "
                         f"{format_sequence(complex_.label(k, upper), graph)}")
    return lines
