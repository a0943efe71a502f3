"""
邊列表文字格式

    # 註解
    N M
    u v
    ...

頂點 1-based、以空白分隔；UTF-8；LF 或 CRLF 皆可。
inline 格式："N;u-v,u-v,..."
"""
import re
from pathlib import Path
from typing import List, Tuple, Union

from models.errors import EdgeListParseError, GraphValidationError
from models.graph import SimpleGraph, new_graph, normalize_edge

INTEGER = re.compile(r'^-?\d+$')


def _ints(tokens: List[str], line_no: int) -> List[int]:
    for tok in tokens:
        if not INTEGER.match(tok):
            raise EdgeListParseError(f"expected integers, got {tok!r}", line_no)
    return [int(tok) for tok in tokens]


def _check_edge(n: int, u: int, v: int, seen: set, line_no: int):
    if not (1 <= u <= n and 1 <= v <= n):
        raise EdgeListParseError(f"vertex out of range in edge {{{u},{v}}}", line_no)
    if u == v:
        raise EdgeListParseError(f"loop {{{u},{v}}}", line_no)
    e = normalize_edge(u, v)
    if e in seen:
        raise EdgeListParseError(f"duplicate edge {{{u},{v}}}", line_no)
    seen.add(e)


def parse_edge_list(text: str) -> SimpleGraph:
    """
    解析邊列表文字

    Args:
        text: 檔案內容

    Returns:
        SimpleGraph: 邊順序與檔案相同

    Raises:
        EdgeListParseError: 格式錯誤（附行號）
    """
    header = None
    edges: List[Tuple[int, int]] = []
    seen: set = set()
    last_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tokens = _ints(line.split(), line_no)
        if header is None:
            if len(tokens) != 2:
                raise EdgeListParseError("header must be 'N M'", line_no)
            n, m = tokens
            if n < 1 or m < 1:
                raise EdgeListParseError(f"header needs N >= 1 and M >= 1, got {n} {m}", line_no)
            header = (n, m)
            continue
        if len(tokens) != 2:
            raise EdgeListParseError("edge line must be 'u v'", line_no)
        if len(edges) == header[1]:
            raise EdgeListParseError(f"more than {header[1]} edge lines", line_no)
        u, v = tokens
        _check_edge(header[0], u, v, seen, line_no)
        edges.append((u, v))

    if header is None:
        raise EdgeListParseError("missing 'N M' header", max(last_line, 1))
    if len(edges) != header[1]:
        raise EdgeListParseError(f"expected {header[1]} edges, found {len(edges)}", max(last_line, 1))
    try:
        return new_graph(header[0], edges)
    except GraphValidationError as e:
        raise EdgeListParseError(str(e), last_line) from e


def parse_inline(literal: str) -> SimpleGraph:
    """解析 inline 格式 "N;u-v,u-v,..."（錯誤回報為第 1 行）"""
    head, sep, body = literal.strip().partition(';')
    if not sep:
        raise EdgeListParseError("inline graph must look like 'N;u-v,u-v'", 1)
    n = _ints([head.strip()], 1)[0]
    if n < 1:
        raise EdgeListParseError(f"vertex count must be positive, got {n}", 1)
    edges = []
    seen: set = set()
    for item in filter(None, (s.strip() for s in body.split(','))):
        parts = item.split('-')
        if len(parts) != 2:
            raise EdgeListParseError(f"malformed edge {item!r}", 1)
        u, v = _ints([p.strip() for p in parts], 1)
        _check_edge(n, u, v, seen, 1)
        edges.append((u, v))
    if not edges:
        raise EdgeListParseError("edge list is empty", 1)
    return new_graph(n, edges)


def read_edge_list(path: Union[str, Path]) -> SimpleGraph:
    return parse_edge_list(Path(path).read_text(encoding='utf-8'))


def format_edge_list(graph: SimpleGraph, comment: str = '') -> str:
    """輸出為邊列表文字（可再被 parse_edge_list 讀回）"""
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{graph.n} {graph.num_edges}")
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
