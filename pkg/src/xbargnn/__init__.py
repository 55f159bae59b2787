"""Value-level simulator for stuck-at-faulty ReRAM crossbars running GNN training.

Subpackages cover the bit-sliced weight codec, faulty crossbar arrays,
statistical fault injection, fault-aware block mapping, hardware-backed GNN
training, and an analytic pipeline timing model.  The `harness` module and
the `xbargnn` CLI tie them into reproducible, seeded experiments.
"""

__version__ = "0.1.0"

from .fixedpoint import FixedPointCodec, encode, decode, clip
from .crossbar import Crossbar, FaultMap, SA0, SA1, MODE_ADJACENCY, MODE_WEIGHT
from .faults import FaultModel, PostDeploymentSchedule, inject, bist_scan, advance_epoch
from .mapper import (
    Block,
    RowAssignment,
    BlockMapping,
    block_decompose,
    mismatch_count,
    row_match,
    prune,
    assign_blocks,
    remap_rows,
    build_mapping,
)
from .graphs import Graph, generate_sbm, partition, load_edge_list, save_edge_list
from .gnn import GnnModel, TrainStrategy, HardwareConfig, RunReport, train, neuron_reorder
from .perf import PipelineSpec, epoch_time, total_time, normalized_report

__all__ = [
    "FixedPointCodec", "encode", "decode", "clip",
    "Crossbar", "FaultMap", "SA0", "SA1", "MODE_ADJACENCY", "MODE_WEIGHT",
    "FaultModel", "PostDeploymentSchedule", "inject", "bist_scan", "advance_epoch",
    "Block", "RowAssignment", "BlockMapping", "block_decompose", "mismatch_count",
    "row_match", "prune", "assign_blocks", "remap_rows", "build_mapping",
    "Graph", "generate_sbm", "partition", "load_edge_list", "save_edge_list",
    "GnnModel", "TrainStrategy", "HardwareConfig", "RunReport", "train", "neuron_reorder",
    "PipelineSpec", "epoch_time", "total_time", "normalized_report",
]
