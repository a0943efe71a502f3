"""
edgering 命令列介面

    python cli.py analyze FILE [--graph N;u-v,...] [--qmax 6] [--jmax 8] [--format json|table]
    python cli.py verify L41|L42|L43|L44|L45|THM|CONJ [--max-n 6] [--k K --l L] [--slow] [--store]
    python cli.py corpus [--max-n 6] [--which all|polytope|ideal] [--export DIR]
    python cli.py monotonicity [--max-n 6] [--pairs 200] [--seed 0]

結束代碼：0 正常、1 找到反例（或內部一致性錯誤）、2 解析/參數錯誤、3 非連通、4 資源上限
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import DEFAULT_JMAX, DEFAULT_MAX_N, DEFAULT_QMAX, configure_logging
from models.database import get_session_maker, init_db
from models.errors import (
    DisconnectedGraphError, EdgeListParseError, GraphValidationError, InternalConsistencyError,
    NotApplicableError, ResourceGuardError
)
from models.schemas import CorpusView, LemmaId
from services.corpus_service import enumerate_connected_graphs
from services.report_service import ReportService
from services.run_store_service import RunStoreService
from services.sweep_service import SweepService, monotonicity_sample
from services.verification_service import VerificationService
from utils.edge_list_parser import format_edge_list, parse_inline, read_edge_list
from utils.table_builder import TableBuilder

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_GUARD = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='edgering',
        description='Edge polytopes, delta-polynomials and toric ideals of small graphs'
    )
    parser.add_argument('--log-level', default=None, help='override EDGERING_LOG_LEVEL')
    sub = parser.add_subparsers(dest='command', required=True)

    analyze = sub.add_parser('analyze', help='analyze one connected graph')
    analyze.add_argument('path', nargs='?', help='edge-list file')
    analyze.add_argument('--graph', help='inline literal "N;u-v,u-v,..."')
    analyze.add_argument('--qmax', type=int, default=DEFAULT_QMAX)
    analyze.add_argument('--jmax', type=int, default=DEFAULT_JMAX)
    analyze.add_argument('--format', choices=['json', 'table'], default='json')

    verify = sub.add_parser('verify', help='run a lemma verifier')
    verify.add_argument('lemma', choices=[m.value for m in LemmaId])
    verify.add_argument('--max-n', type=int, default=DEFAULT_MAX_N)
    verify.add_argument('--k', type=int, default=None)
    verify.add_argument('--l', type=int, default=None)
    verify.add_argument('--qmax', type=int, default=DEFAULT_QMAX)
    verify.add_argument('--jmax', type=int, default=DEFAULT_JMAX)
    verify.add_argument('--slow', action='store_true', help='include the long-running cases')
    verify.add_argument('--include-q5', action='store_true', help='CONJ: also screen q = 5')
    verify.add_argument('--store', action='store_true', help='persist the run to EDGERING_DATABASE_URL')
    verify.add_argument('--format', choices=['json', 'table'], default='json')

    corpus = sub.add_parser('corpus', help='sweep the connected-graph corpus')
    corpus.add_argument('--max-n', type=int, default=DEFAULT_MAX_N)
    corpus.add_argument('--which', choices=[v.value for v in CorpusView], default=CorpusView.ALL.value)
    corpus.add_argument('--qmax', type=int, default=DEFAULT_QMAX)
    corpus.add_argument('--export', metavar='DIR', help='write each graph as an edge-list file')
    corpus.add_argument('--format', choices=['json', 'table'], default='json')

    mono = sub.add_parser('monotonicity', help='sampled subgraph degree monotonicity')
    mono.add_argument('--max-n', type=int, default=DEFAULT_MAX_N)
    mono.add_argument('--pairs', type=int, default=200)
    mono.add_argument('--seed', type=int, default=0)

    return parser


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith('\n'):
        sys.stdout.write('\n')


def cmd_analyze(args) -> int:
    if args.graph:
        graph = parse_inline(args.graph)
    elif args.path:
        graph = read_edge_list(args.path)
    else:
        raise NotApplicableError("analyze needs an edge-list file or --graph")
    report = ReportService(q_max=args.qmax, j_max=args.jmax).analyze(graph)
    _emit(TableBuilder.analysis(report) if args.format == 'table' else report.model_dump_json(indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    service = VerificationService(
        max_n=args.max_n,
        q_max=args.qmax,
        j_max=args.jmax,
        slow=args.slow,
        include_q5=args.include_q5,
        k=args.k,
        l=args.l
    )
    result = service.run(LemmaId(args.lemma))
    if args.store:
        SessionLocal = get_session_maker(init_db())
        db = SessionLocal()
        try:
            RunStoreService(db).record(result)
        finally:
            db.close()
    _emit(TableBuilder.verification(result) if args.format == 'table' else result.model_dump_json(indent=2))
    return EXIT_OK if result.passed else EXIT_COUNTEREXAMPLE


def cmd_corpus(args) -> int:
    summary = SweepService().corpus_summary(args.max_n, CorpusView(args.which), q_max=args.qmax)
    if args.export:
        export_corpus(args.max_n, Path(args.export))
    _emit(TableBuilder.corpus(summary) if args.format == 'table' else summary.model_dump_json(indent=2))
    return EXIT_OK


def export_corpus(max_n: int, directory: Path) -> List[Path]:
    """語料庫中每個有邊的圖寫成一個邊列表檔案（沒有邊的單點圖略過）"""
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for index, graph in enumerate(enumerate_connected_graphs(max_n), start=1):
        if graph.num_edges == 0:
            continue
        path = directory / f"graph_{index:04d}.txt"
        path.write_text(format_edge_list(graph, comment=graph.to_literal()), encoding='utf-8')
        written.append(path)
    logger.info(f"Exported {len(written)} graphs to {directory}")
    return written


def cmd_monotonicity(args) -> int:
    report = monotonicity_sample(args.max_n, pairs=args.pairs, seed=args.seed)
    _emit(report.model_dump_json(indent=2))
    return EXIT_OK if not report.violations else EXIT_COUNTEREXAMPLE


COMMANDS = {
    'analyze': cmd_analyze,
    'verify': cmd_verify,
    'corpus': cmd_corpus,
    'monotonicity': cmd_monotonicity,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK

    level = logging.getLevelName(args.log_level.upper()) if args.log_level else None
    configure_logging(level if isinstance(level, int) else None)

    try:
        return COMMANDS[args.command](args)
    except (EdgeListParseError, GraphValidationError, NotApplicableError) as e:
        logger.error(str(e))
        return EXIT_PARSE
    except DisconnectedGraphError as e:
        logger.error(str(e))
        return EXIT_DISCONNECTED
    except ResourceGuardError as e:
        logger.error(str(e))
        return EXIT_GUARD
    except InternalConsistencyError as e:
        logger.error(f"Internal consistency failure: {e}")
        return EXIT_COUNTEREXAMPLE
    except OSError as e:
        logger.error(f"Cannot read input: {e}")
        return EXIT_PARSE


if __name__ == '__main__':
    sys.exit(main())
