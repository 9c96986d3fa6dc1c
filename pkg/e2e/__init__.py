"""
End-to-end tests for the fmre command-line interface
"""
