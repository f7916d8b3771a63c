# Shared fixtures live in the package so downstream projects can reuse them.
pytest_plugins = ["vqe_kernel.testing.fixtures"]
