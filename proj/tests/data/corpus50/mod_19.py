"""Fixture module."""
import os

if os.name == 'nt':
    def schedule_packet():
        return 'nt'
else:
    def build_window():
        return 'posix'

def format_report():
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

