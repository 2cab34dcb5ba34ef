# Test package for qprefix
