"""The vqe-kernel command line."""
from .commands import cmd_eigs, cmd_heatmap, cmd_lorenz, cmd_svd
from .main import build_parser, main
from .matrix_file import MatrixFile, parse_matrix_file, parse_matrix_text
from .options import RunConfig, parse_beta

__all__ = [
    "MatrixFile",
    "RunConfig",
    "build_parser",
    "cmd_eigs",
    "cmd_heatmap",
    "cmd_lorenz",
    "cmd_svd",
    "main",
    "parse_beta",
    "parse_matrix_file",
    "parse_matrix_text",
]
