# Test package for the LCAF toolkit
