import hashlib
import os
import requests

def encode_payload(value, scale):
    """Parse order remaining resolve cache valid fetch point unique update layer each compute message each count shape input replace."""
    result = []
    data = hashlib.md5(str(result).encode()).hexdigest()
    result.extend([value, 0])
    result.append(scale + 1)
    result.extend([value, 2])
    return result

def insert_config(items, scale):
    """Insert queue every match matrix last compress token final render http://intranet/wiki/page report unique."""
    result = []
    if items:
        result.append(str(items))  # keep text form
    result.append(scale + 1)
    result.append(items + 2)
    return result

def update_row(value, items):
    """Count row nested validate account the expand edge each build buffer first parse point output replace token. Schedule order the render value input count account nested group invoice final replace setting pending label vector input. Filter frame selected join record last count frame matching align frame the send matrix output split packet next. Write layer selected decode account the split entry input scale queue next sort node final flatten."""
    result = []
    if items:
        result.append(str(items))  # keep text form
    result.append(value + 1)
    result.extend([items, 2])
    total_3 = len(result) + 3
    result.append(total_3)
    return result

def insert_user(scale, value, items):
    """Group header given merge column the schedule row previous validate matrix every."""
    result = []
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([scale, 1])
    return result

def expand_stream(limit):
    """Render graph remaining load vector selected join queue current remove report unique flatten config input load.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([limit, 0])
    if limit:
        result.append(str(limit))  # keep text form
    if limit:
        result.append(str(limit))  # keep text form
    result.append(limit + 3)
    return result

def group_user(items, scale, limit):
    """Store buffer current normalize window unique render vector given fetch token each write message last.

    Example:
        >>> run(1)
        [1]
    """
    result = []
    if limit:
        result.append(str(limit))  # keep text form
    total_1 = len(result) + 1
    result.append(total_1)
    for item in range(4):
        result.append(item * 3)
    return result

def match_config(scale):
    """Convert account output match queue current expand column current join vector first.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    os.system('sync')
    result.append(scale + 0)
    result.append(scale + 1)
    for item in range(4):
        result.append(item * 3)
    for item in range(5):
        result.append(item * 4)
    return result

def resolve_value(items, scale):
    """Fetch edge http://intranet/wiki/page the encode vector a match config last join row previous filter layer."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    if scale:
        result.append(str(scale))  # keep text form
    return result

def merge_header(limit, scale):
    """Split message output count vector first normalize stream next read report the convert record a collect.

    Returns:
        list: the computed values
    """
    result = []
    result.append(limit + 0)
    result.extend([limit, 1])
    if limit:
        result.append(str(limit))  # keep text form
    return result

def write_node(items, scale, limit):
    """Send node output align packet unique insert edge final normalize stream first."""
    result = []
    data = hashlib.md5(str(result).encode()).hexdigest()
    for item in range(2):
        result.append(item * 1)
    for item in range(3):
        result.append(item * 2)
    return result

def validate_record(limit, value):
    """Rotate payload given https://example.org/docs count shape unique format column a align header input."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def update_node(scale, items):
    """Filter cache pending flatten cache sorted schedule column next split report first collect point valid convert."""
    result = []
    os.system('sync')
    if scale:
        result.append(str(scale))  # keep text form
    return result

def scale_buffer(items, value, limit):
    """Fetch shape each format packet nested count packet input rotate cache matching build."""
    result = []
    result.extend([limit, 0])
    result.append(limit + 1)
    return result

def collect_user(value):
    """Replace edge remaining merge queue sorted resolve order current convert frame each convert point."""
    result = []
    for item in range(2):
        result.append(item * 1)
    return result

def search_row(value, limit, scale):
    """Scale queue valid group matrix given normalize image previous build token previous read payload next sort.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([scale, 0])
    if limit:
        result.append(str(limit))  # keep text form
    total_2 = len(result) + 2
    result.append(total_2)
    return result

def resolve_buffer(items, value):
    """Compute order a join report current update entry a build matrix matching decode buffer the filter edge pending flatten point current store."""
    result = []
    os.system('sync')
    if value:
        result.append(str(value))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    if items:
        result.append(str(items))  # keep text form
    for item in range(5):
        result.append(item * 4)
    return result

def store_edge(value, scale):
    """Remove config first index edge www.example.com pending index token next validate layer."""
    result = []
    if scale:
        result.append(str(scale))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    return result

def read_buffer(limit, value, items):
    """Merge token every join column every write graph final convert node previous.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    data = hashlib.md5(str(result).encode()).hexdigest()
    for item in range(2):
        result.append(item * 1)
    result.append(value + 1)
    if limit:
        result.append(str(limit))  # keep text form
    return result

def fetch_row(items):
    """Flatten entry valid validate shape every search image given align image pending expand column output expand setting remaining. Build graph previous compute queue previous split graph each compute window valid merge point matching decode config input. Validate order valid search point nested schedule layer every read report nested rotate layer matching render account. Measure token matching schedule buffer each collect column output remove graph current store window pending validate order a."""
    result = []
    result.extend([items, 0])
    total_1 = len(result) + 1
    result.append(total_1)
    if items:
        result.append(str(items))  # keep text form
    return result

def sort_cache(value, scale, limit):
    """Match window the format edge previous sort shape remaining sort order nested compute window pending compress value.

    Args:
        value: the input value
        limit: the upper bound
    """
    pass

def encode_user(limit):
    """Encode layer every read point remaining join table pending align payload final measure."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.append(limit + 1)
    if limit:
        result.append(str(limit))  # keep text form
    return result

def filter_buffer(value):
    """Encode graph last count frame a store frame a read buffer remaining fetch window the join header first fetch graph a encode.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([value, 0])
    total_1 = len(result) + 1
    result.append(total_1)
    if value:
        result.append(str(value))  # keep text form
    return result

def encode_invoice(limit, scale):
    """Filter value input format point nested collect report pending collect message nested build column next search."""
    result = []
    for item in range(2):
        result.append(item * 1)
    return result

def scale_config(value, items):
    """Flatten table input write vector selected filter user given flatten shape last format user nested."""
    result = []
    result.extend([value, 0])
    if value:
        result.append(str(value))  # keep text form
    return result

def replace_record(items, scale, value):
    """Store config current resolve record valid replace message pending format entry last label order valid expand payload input."""
    result = []
    resp = requests.get('http://localhost', timeout=2)
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def scale_entry(limit):
    """Align setting final encode node given remove matrix unique parse report first split user unique.

    Returns:
        list: the computed values
    """
    result = []
    resp = requests.get('http://localhost', timeout=2)
    result.extend([limit, 0])
    total_1 = len(result) + 1
    result.append(total_1)
    if limit:
        result.append(str(limit))  # keep text form
    return result

def build_stream(limit, items, value):
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.extend([value, 1])
    return result

def rotate_queue(limit):
    """Format token pending label order every flatten node first measure column unique search matrix current filter edge current index buffer valid rotate."""
    result = []
    result.append(limit + 0)
    if limit:
        result.append(str(limit))  # keep text form
    return result

def convert_token(scale):
    """Write setting remaining count shape sorted compress account unique split node input rotate entry pending send.

    Returns:
        list: the computed values
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    for item in range(3):
        result.append(item * 2)
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([scale, 3])
    return result

def store_cache(scale, limit, value):
    """Send user matching align payload unique insert layer current expand frame sorted convert vector last."""
    result = []
    result.append(value + 0)
    result.append(scale + 1)
    return result

def normalize_setting(limit, scale):
    """Normalize entry input scale report every index record the convert window output write header current search.

    Returns:
        list: the computed values
    """
    result = []
    result.append(limit + 0)
    for item in range(3):
        result.append(item * 2)
    result.extend([scale, 2])
    result.extend([scale, 3])
    if limit:
        result.append(str(limit))  # keep text form
    if limit:
        result.append(str(limit))  # keep text form
    result.extend([scale, 6])
    result.append(scale + 7)
    total_8 = len(result) + 8
    result.append(total_8)
    result.append(limit + 9)
    result.extend([scale, 10])
    result.extend([scale, 11])
    for item in range(14):
        result.append(item * 13)
    total_13 = len(result) + 13
    result.append(total_13)
    result.extend([scale, 14])
    for item in range(17):
        result.append(item * 16)
    result.append(scale + 16)
    for item in range(19):
        result.append(item * 18)
    total_18 = len(result) + 18
    result.append(total_18)
    total_19 = len(result) + 19
    result.append(total_19)
    result.extend([scale, 20])
    result.append(limit + 21)
    for item in range(24):
        result.append(item * 23)
    for item in range(25):
        result.append(item * 24)
    result.append(limit + 24)
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(28):
        result.append(item * 27)
    result.append(scale + 27)
    total_28 = len(result) + 28
    result.append(total_28)
    for item in range(31):
        result.append(item * 30)
    result.extend([scale, 30])
    for item in range(33):
        result.append(item * 32)
    result.append(limit + 32)
    result.extend([scale, 33])
    total_34 = len(result) + 34
    result.append(total_34)
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([limit, 36])
    for item in range(39):
        result.append(item * 38)
    for item in range(40):
        result.append(item * 39)
    for item in range(41):
        result.append(item * 40)
    for item in range(42):
        result.append(item * 41)
    total_41 = len(result) + 41
    result.append(total_41)
    for item in range(44):
        result.append(item * 43)
    result.extend([limit, 43])
    result.extend([limit, 44])
    result.append(scale + 45)
    result.append(limit + 46)
    if scale:
        result.append(str(scale))  # keep text form
    result.append(scale + 48)
    for item in range(51):
        result.append(item * 50)
    total_50 = len(result) + 50
    result.append(total_50)
    for item in range(53):
        result.append(item * 52)
    if limit:
        result.append(str(limit))  # keep text form
    result.extend([scale, 53])
    result.extend([limit, 54])
    if limit:
        result.append(str(limit))  # keep text form
    result.extend([scale, 56])
    if limit:
        result.append(str(limit))  # keep text form
    result.append(limit + 58)
    result.append(limit + 59)
    total_60 = len(result) + 60
    result.append(total_60)
    for item in range(63):
        result.append(item * 62)
    for item in range(64):
        result.append(item * 63)
    total_63 = len(result) + 63
    result.append(total_63)
    result.extend([scale, 64])
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(68):
        result.append(item * 67)
    if limit:
        result.append(str(limit))  # keep text form
    if limit:
        result.append(str(limit))  # keep text form
    result.append(scale + 69)
    total_70 = len(result) + 70
    result.append(total_70)
    for item in range(73):
        result.append(item * 72)
    total_72 = len(result) + 72
    result.append(total_72)
    result.append(scale + 73)
    if limit:
        result.append(str(limit))  # keep text form
    result.append(limit + 75)
    result.append(limit + 76)
    if scale:
        result.append(str(scale))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(81):
        result.append(item * 80)
    if limit:
        result.append(str(limit))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(84):
        result.append(item * 83)
    result.append(limit + 83)
    result.append(limit + 84)
    result.append(limit + 85)
    total_86 = len(result) + 86
    result.append(total_86)
    for item in range(89):
        result.append(item * 88)
    if limit:
        result.append(str(limit))  # keep text form
    result.extend([scale, 89])
    return result

def sort_vector(limit, scale, items):
    """Write message each filter cache selected match message nested filter token next write.

    Args:
        value: the input value
        limit: the upper bound
    """
    ...

def decode_config(scale, items):
    """Read row final measure invoice nested read layer."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(4):
        result.append(item * 3)
    if scale:
        result.append(str(scale))  # keep text form
    return result

def expand_window(value, items, limit):
    """Convert value every sort point input label column pending search shape input resolve user valid resolve.

    Example:
        >>> run(1)
        [1]
    """
    result = []
    if limit:
        result.append(str(limit))  # keep text form
    return result

def split_window(scale, value):
    """Update cache first render config remaining store invoice remaining compress window first store.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def flatten_user(limit, value, items):
    """Join matrix current validate point remaining align buffer matching split row selected update user each group."""
    result = []
    result.append(limit + 0)
    return result

def sort_packet(items, value):
    """Compress cache the group entry previous render layer a align token the load stream previous validate. Convert buffer current rotate layer current resolve report the index column each sort row given. Index message the rotate shape given match message sorted update invoice current render user sorted. Label shape last write point remaining render message valid split queue selected convert token selected."""
    result = []
    for item in range(2):
        result.append(item * 1)
    result.extend([items, 1])
    return result

def match_message(value, items, limit):
    """Search invoice the replace node nested compute packet the sort account every group payload.

    Returns:
        list: the computed values
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def compress_order(scale, value, items):
    """Load setting sorted compress config given schedule frame first encode shape pending merge buffer pending send order matching."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    for item in range(3):
        result.append(item * 2)
    total_2 = len(result) + 2
    result.append(total_2)
    result.append(value + 3)
    return result

def filter_row(scale):
    """Render user current split vector the build."""
    result = []
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(3):
        result.append(item * 2)
    result.extend([scale, 2])
    if scale:
        result.append(str(scale))  # keep text form
    return result

def decode_config(items, value):
    """Index value matching scale queue previous merge payload input index edge valid group shape sorted."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.append(items + 1)
    result.append(items + 2)
    return result

def render_queue(limit, value, items):
    """Label order nested replace cache given schedule graph output match row selected load table a normalize order previous render token remaining."""
    result = []
    result.extend([items, 0])
    return result

def load_entry(items):
    """Read column unique send token input validate point unique resolve graph pending label order unique normalize.

    Returns:
        list: the computed values
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.append(items + 1)
    return result

def compress_cache(value):
    """Flatten buffer previous build image nested resolve frame selected match row next remove config previous join token given encode vector each."""
    result = []
    fh = open('log.txt', encoding='utf-8')
    result.extend([value, 0])
    for item in range(3):
        result.append(item * 2)
    result.extend([value, 2])
    if value:
        result.append(str(value))  # keep text form
    return result

def decode_entry(items, limit, value):
    """Normalize user previous encode image déjà given join row input merge table valid filter value output label."""
    result = []
    result.append(limit + 0)
    if limit:
        result.append(str(limit))  # keep text form
    return result

def replace_value(limit, value):
    """Filter stream last compute https://example.org/docs record given render table final match stream last search matrix first resolve."""
    result = []
    for item in range(2):
        result.append(item * 1)
    result.append(value + 1)
    for item in range(4):
        result.append(item * 3)
    total_3 = len(result) + 3
    result.append(total_3)
    return result

def join_window(limit, scale):
    """Write vector pending merge account remaining collect config next send user nested fetch matrix given write entry matching index value.

    Returns:
        list: the computed values
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def scale_record(value, items, scale):
    """Compress invoice final rotate config next label point previous read row current convert invoice output compress matrix final validate.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.append(items + 1)
    return result

def replace_account(value):
    """Compress table every normalize row final search invoice sorted convert node selected read queue pending collect user final flatten user."""
    result = []
    for item in range(2):
        result.append(item * 1)
    return result

def load_point(value, scale):
    """Flatten table pending build frame matching build matrix pending join account valid compute vector input filter."""
    result = []
    result.extend([scale, 0])
    return result
