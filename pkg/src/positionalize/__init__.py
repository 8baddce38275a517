from src.positionalize.extract import positionalize
from src.positionalize.signatures import SignatureOrder, signatures
from src.positionalize.stages import StageTable, compute_alpha, compute_beta, priority_stage
