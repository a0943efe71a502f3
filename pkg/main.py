"""
edgering - HTTP service
"""
import os
import logging
from typing import List, Optional
from fastapi import FastAPI, Request, HTTPException, Depends
from fastapi.responses import JSONResponse
from sqlalchemy.orm import Session

from config import APP_VERSION, SCHEMA_VERSION, configure_logging
from models.database import get_db
from models.errors import (
    DisconnectedGraphError, EdgeListParseError, GraphValidationError,
    InternalConsistencyError, ResourceGuardError
)
from models.graph import new_graph
from models.schemas import (
    AnalysisReport, AnalyzeRequest, Counterexample, LemmaId, RunResponse, VerificationResult, VerifyRequest
)
from services.report_service import ReportService
from services.run_store_service import RunStoreService
from services.verification_service import VerificationService
from utils.edge_list_parser import parse_inline

# 設定日誌
configure_logging()
logger = logging.getLogger(__name__)

# FastAPI 應用程式
app = FastAPI(
    title="edgering",
    description="邊多面體、δ 多項式與圖的 toric ideal 計算，以及小圖語料庫上的 lemma 驗證",
    version=APP_VERSION
)


@app.on_event("startup")
async def startup_event():
    """應用程式啟動時執行"""
    logger.info("Starting edgering service...")
    logger.info(f"PORT: {os.getenv('PORT', '8000')}")


@app.get("/")
async def root():
    """根路徑 - API 資訊"""
    return {
        "service": "edgering",
        "version": APP_VERSION,
        "schema_version": SCHEMA_VERSION,
        "status": "running"
    }


@app.get("/health")
async def health_check():
    """健康檢查端點"""
    return {"status": "healthy"}


@app.post("/analyze", response_model=AnalysisReport)
def analyze(request: AnalyzeRequest):
    """
    分析單一連通圖

    body 可以是 inline 字串 {"graph": "N;u-v,..."}，或 {"n": N, "edges": [[u, v], ...]}
    """
    if request.graph is not None:
        graph = parse_inline(request.graph)
    else:
        graph = new_graph(request.n, request.edges)
    service = ReportService(q_max=request.qmax, j_max=request.jmax)
    return service.analyze(graph)


@app.post("/verify/{lemma_id}", response_model=VerificationResult)
def verify(lemma_id: LemmaId, request: VerifyRequest, db: Session = Depends(get_db)):
    """執行驗證並保存結果"""
    service = VerificationService(
        max_n=request.max_n,
        q_max=request.qmax,
        j_max=request.jmax,
        slow=request.slow,
        include_q5=request.include_q5,
        k=request.k,
        l=request.l
    )
    result = service.run(lemma_id)
    RunStoreService(db).record(result)
    return result


@app.get("/runs", response_model=List[RunResponse])
def list_runs(lemma_id: Optional[LemmaId] = None, limit: int = 50, db: Session = Depends(get_db)):
    """已保存的驗證紀錄（新到舊）"""
    runs = RunStoreService(db).list_runs(lemma_id.value if lemma_id else None, limit)
    return [RunResponse.model_validate(run) for run in runs]


@app.get("/runs/{run_id}/counterexamples", response_model=List[Counterexample])
def run_counterexamples(run_id: int, db: Session = Depends(get_db)):
    """某次驗證保存的反例"""
    store = RunStoreService(db)
    if store.get_run(run_id) is None:
        raise HTTPException(status_code=404, detail=f"run {run_id} not found")
    stored = store.get_counterexamples(run_id)
    return [Counterexample(graph=c.graph, edge_list=c.edge_list, detail=c.detail or {}) for c in stored]


# 錯誤處理
@app.exception_handler(EdgeListParseError)
async def parse_error_handler(request: Request, exc: EdgeListParseError):
    return JSONResponse(status_code=422, content={"detail": str(exc), "line": exc.line_no})


@app.exception_handler(GraphValidationError)
async def validation_error_handler(request: Request, exc: GraphValidationError):
    return JSONResponse(
        status_code=422,
        content={"detail": str(exc), "edge": list(exc.edge) if exc.edge else None}
    )


@app.exception_handler(DisconnectedGraphError)
async def disconnected_handler(request: Request, exc: DisconnectedGraphError):
    return JSONResponse(status_code=422, content={"detail": str(exc), "components": exc.components})


@app.exception_handler(ResourceGuardError)
async def guard_handler(request: Request, exc: ResourceGuardError):
    return JSONResponse(status_code=422, content={"detail": str(exc), "limit": exc.limit})


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(InternalConsistencyError)
async def consistency_handler(request: Request, exc: InternalConsistencyError):
    logger.error(f"Internal consistency failure: {exc}")
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    """全域錯誤處理"""
    logger.error(f"Unhandled exception: {exc}", exc_info=True)
    return JSONResponse(
        status_code=500,
        content={"detail": "Internal server error"}
    )


if __name__ == "__main__":
    import uvicorn
    port = int(os.getenv("PORT", 8000))
    logger.info(f"Starting server on port {port}...")
    uvicorn.run(
        "main:app",
        host="0.0.0.0",
        port=port,
        log_level="info"
    )
