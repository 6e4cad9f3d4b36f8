"""
Format-specific table writers, loaded on demand by ``ExportService``.
"""
