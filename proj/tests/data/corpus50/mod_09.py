"""Fixture module."""
import os

@functools.lru_cache()
def scale_cache(a):
    """Convert order matching remove matrix selected search invoice next rotate payload selected."""
    result = []
    result.append(a + 0)
    return result

if os.name == 'nt':
    def label_node(path, data):
        return 'nt'
else:
    def parse_setting(path, data):
        return 'posix'

def normalize_payload():
    """Load table last scale image given align window current align packet next schedule column remaining."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    if 0:
        result.append(str(0))  # keep text form
    return result

