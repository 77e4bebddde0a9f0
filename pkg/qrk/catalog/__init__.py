"""Identity catalog: records, verification modes and the registry."""
