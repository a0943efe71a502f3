"""
驗證紀錄服務：保存與查詢驗證執行結果
"""
from typing import List, Optional
from sqlalchemy.orm import Session
from models.database import VerificationRun, StoredCounterexample
from models.schemas import VerificationResult
import logging

logger = logging.getLogger(__name__)


class RunStoreService:
    """驗證紀錄服務"""

    def __init__(self, db: Session):
        self.db = db

    def record(self, result: VerificationResult) -> VerificationRun:
        """
        保存一次驗證執行（含所有反例）

        Args:
            result: 驗證結果

        Returns:
            VerificationRun: 已寫入的紀錄
        """
        try:
            run = VerificationRun(
                lemma_id=result.lemma_id.value,
                params=dict(result.params),
                instances_checked=result.instances_checked,
                counterexample_count=len(result.counterexamples),
                asserted=result.asserted,
                wall_time=result.wall_time
            )
            self.db.add(run)
            self.db.flush()

            for ce in result.counterexamples:
                self.db.add(StoredCounterexample(
                    run_id=run.id,
                    graph=ce.graph,
                    edge_list=ce.edge_list,
                    detail=dict(ce.detail)
                ))

            self.db.commit()
            self.db.refresh(run)
            logger.info(f"Stored run {run.id}: {run.lemma_id}, {run.counterexample_count} counterexamples")
            return run

        except Exception as e:
            self.db.rollback()
            logger.error(f"Error storing verification run: {e}")
            raise

    def list_runs(self, lemma_id: Optional[str] = None, limit: int = 50) -> List[VerificationRun]:
        """最近的執行紀錄（新到舊）"""
        query = self.db.query(VerificationRun)
        if lemma_id:
            query = query.filter(VerificationRun.lemma_id == lemma_id)
        return query.order_by(VerificationRun.created_at.desc(), VerificationRun.id.desc()).limit(limit).all()

    def get_run(self, run_id: int) -> Optional[VerificationRun]:
        return self.db.get(VerificationRun, run_id)

    def get_counterexamples(self, run_id: int) -> List[StoredCounterexample]:
        return self.db.query(StoredCounterexample).filter(
            StoredCounterexample.run_id == run_id
        ).order_by(StoredCounterexample.id).all()
