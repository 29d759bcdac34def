# Tests package for curve birationality
