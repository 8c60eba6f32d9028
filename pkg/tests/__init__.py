"""fsdaudit test suite."""
