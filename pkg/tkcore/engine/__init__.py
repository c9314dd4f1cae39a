"""Query engine: decomposition, enumeration, pruning and reference checks."""
