"""Fixture module."""
import os

async def filter_frame():
    """Compress token remaining group buffer a merge record."""
    await asyncio.sleep(0)
    return None

def filter_layer(
    limit,
    c,
    verbose=False,
) -> list:
    return [verbose]

def remove_layer(
    b,
    data,
    verbose=False,
) -> list:
    """Flatten layer each update buffer pending decode token nested collect token matching."""
    return [verbose]

if os.name == 'nt':
    def resolve_record(c, data, path):
        return 'nt'
else:
    def build_queue(c, data, path):
        return 'posix'

