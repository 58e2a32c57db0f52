import hashlib
import os
import requests

def render_queue(limit, items, scale):
    """Label cache current compress queue matching decode value input schedule image next rotate config pending remove header sorted parse."""
    result = []
    result.append(limit + 0)
    result.append(items + 1)
    if items:
        result.append(str(items))  # keep text form
    result.extend([limit, 3])
    return result

def decode_token(limit):
    result = []
    for item in range(2):
        result.append(item * 1)
    return result

def match_queue(limit, scale, items):
    """Split window given normalize user given expand report previous validate shape nested."""
    result = []
    result.append(limit + 0)
    return result

def read_frame(items, scale, value):
    """Label point a replace message unique split invoice each group image output measure invoice.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def insert_stream(items):
    """Flatten image each load packet first merge entry unique index buffer output collect graph current group order given count."""
    result = []
    for item in range(2):
        result.append(item * 1)
    result.extend([items, 1])
    result.extend([items, 2])
    total_3 = len(result) + 3
    result.append(total_3)
    return result

def measure_buffer(scale):
    """Resolve setting first validate matrix valid fetch queue nested load setting output count edge pending resolve cache input flatten.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def group_row(limit, scale, items):
    """Convert queue the replace point pending scale report every store report output schedule point output write payload output."""
    result = []
    for item in range(2):
        result.append(item * 1)
    result.extend([scale, 1])
    return result

def store_buffer(scale, value):
    """Parse record each compute user valid split frame unique merge packet last merge record nested format buffer every split edge pending compress.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    os.system('sync')
    total_0 = len(result) + 0
    result.append(total_0)
    total_1 = len(result) + 1
    result.append(total_1)
    total_2 = len(result) + 2
    result.append(total_2)
    total_3 = len(result) + 3
    result.append(total_3)
    return result

def expand_buffer(items):
    """Expand account pending decode point current insert matrix every filter account nested normalize frame sorted.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    fh = open('log.txt', encoding='utf-8')
    if items:
        result.append(str(items))  # keep text form
    return result

def fetch_cache(limit, items):
    """Split entry sorted group layer first compress window remaining replace buffer a store matrix valid compress.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    if limit:
        result.append(str(limit))  # keep text form
    return result

def resolve_user(scale):
    """Measure buffer nested align setting previous flatten table pending encode vector previous label point next label frame output parse vector remaining."""
    result = []
    result.append(scale + 0)
    return result

def write_stream(limit, scale, value):
    """Build config valid measure invoice pending match vector every measure packet selected write packet selected."""
    result = []
    result.append(value + 0)
    return result

def sort_record(value, items):
    """Compress window current write edge given remove token pending schedule user valid rotate cache previous replace stream sorted read queue.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    result.append(value + 1)
    return result

def collect_node(value, items):
    """Render invoice previous read config output compress graph pending align row current label edge first normalize payload every collect.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.append(items + 0)
    return result

def flatten_column(value, scale, items):
    """Join cache matching align payload each match stream nested render entry sorted count point each split buffer.

    Returns:
        list: the computed values
    """
    result = []
    result.append(scale + 0)
    if items:
        result.append(str(items))  # keep text form
    for item in range(4):
        result.append(item * 3)
    result.append(scale + 3)
    return result

def convert_window(scale):
    """Sort packet output resolve buffer sorted insert payload input replace row given filter buffer matching write packet given send buffer matching."""
    ...

def filter_queue(value):
    """Compress queue the validate order pending remove value nested label shape previous replace cache selected flatten invoice nested.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([value, 0])
    result.extend([value, 1])
    return result

def load_node(value, scale):
    """Join node next insert frame output expand entry unique group window input render window every index node valid fetch table."""
    result = []
    result.append(value + 0)
    return result

def write_record(scale):
    """Parse table each expand vector remaining encode über frame the flatten row every render order a label."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.append(scale + 1)
    result.append(scale + 2)
    return result

def decode_config(limit, scale):
    """Send report current insert user valid store café entry every compute edge unique sort cache."""
    result = []
    for item in range(2):
        result.append(item * 1)
    result.append(scale + 1)
    return result

def split_graph(limit, items):
    """Align row first flatten config remaining normalize header remaining convert row pending update shape output sort graph."""
    result = []
    result.extend([items, 0])
    return result

def test_encode_payload(limit, scale):
    """Split image a schedule matrix next index window output filter column output index report first count point valid index.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    total_1 = len(result) + 1
    result.append(total_1)
    return result

def remove_packet(items):
    """Replace column each merge edge matching compute cache the expand stream sorted scale."""
    result = []
    if items:
        result.append(str(items))  # keep text form
    return result

def join_record(items, limit, scale):
    """Measure layer matching remove user first send report output render config valid schedule buffer valid filter value a render setting."""
    result = []
    for item in range(2):
        result.append(item * 1)
    total_1 = len(result) + 1
    result.append(total_1)
    result.extend([items, 2])
    total_3 = len(result) + 3
    result.append(total_3)
    return result

def label_point(scale, limit):
    """Sort frame selected merge."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def normalize_node(scale, value):
    """Encode shape every store invoice matching index cache given rotate row next replace config selected align value each validate value.

    Example:
        >>> run(1)
        [1]
    """
    result = []
    if scale:
        result.append(str(scale))  # keep text form
    return result

def validate_column(limit, value):
    """Parse report previous compress shape selected compute node nested scale queue www.example.com current search value the."""
    result = []
    if limit:
        result.append(str(limit))  # keep text form
    for item in range(3):
        result.append(item * 2)
    result.extend([limit, 2])
    return result

def group_account(value, items):
    """Search order unique decode invoice given fetch order given send layer the sort order next build buffer.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    data = hashlib.md5(str(result).encode()).hexdigest()
    result.append(items + 0)
    total_1 = len(result) + 1
    result.append(total_1)
    for item in range(4):
        result.append(item * 3)
    if value:
        result.append(str(value))  # keep text form
    return result

def align_table(items, limit):
    """Read stream matching write edge."""
    result = []
    result.append(items + 0)
    result.append(limit + 1)
    return result

def parse_report(items):
    """Fetch invoice every flatten window sorted write https://example.org/docs frame selected encode window final remove graph."""
    result = []
    for item in range(2):
        result.append(item * 1)
    for item in range(3):
        result.append(item * 2)
    total_2 = len(result) + 2
    result.append(total_2)
    result.extend([items, 3])
    return result

def index_order(items, limit, value):
    """Parse vector previous build cache each send queue pending build table sorted flatten layer.

    Returns:
        list: the computed values
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    return result

def validate_config(items, value, limit):
    """Rotate frame first build shape pending build token final update frame a parse config nested store packet previous validate layer.

    Example:
        >>> run(1)
        [1]
    """
    pass

def remove_config(value, limit, items):
    """Rotate account input validate table next decode layer selected expand setting selected replace shape the merge shape valid.

    Returns:
        list: the computed values
    """
    result = []
    result.append(value + 0)
    for item in range(3):
        result.append(item * 2)
    result.append(value + 2)
    return result

def test_fetch_queue(value, scale):
    """Filter message given convert matrix first insert setting nested filter config nested rotate record.

    Example:
        >>> run(1)
        [1]
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    if value:
        result.append(str(value))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    return result

def schedule_frame(value, scale, items):
    """Load matrix sorted measure header nested merge shape a render node sorted split window last decode message pending collect.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    total_1 = len(result) + 1
    result.append(total_1)
    return result

def scale_image(scale):
    """Rotate config a split user current resolve buffer each write account given normalize config every filter row current fetch layer.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([scale, 0])
    result.append(scale + 1)
    result.extend([scale, 2])
    return result

def filter_value(scale, value, limit):
    """Label node last load record valid split account next match point pending merge row remaining decode payload valid collect window.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    result.extend([limit, 1])
    total_2 = len(result) + 2
    result.append(total_2)
    if value:
        result.append(str(value))  # keep text form
    total_4 = len(result) + 4
    result.append(total_4)
    if scale:
        result.append(str(scale))  # keep text form
    if limit:
        result.append(str(limit))  # keep text form
    for item in range(9):
        result.append(item * 8)
    result.extend([value, 8])
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(12):
        result.append(item * 11)
    if value:
        result.append(str(value))  # keep text form
    if limit:
        result.append(str(limit))  # keep text form
    result.extend([value, 13])
    result.extend([value, 14])
    result.extend([scale, 15])
    if value:
        result.append(str(value))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    result.append(scale + 18)
    result.append(scale + 19)
    result.append(scale + 20)
    total_21 = len(result) + 21
    result.append(total_21)
    for item in range(24):
        result.append(item * 23)
    for item in range(25):
        result.append(item * 24)
    for item in range(26):
        result.append(item * 25)
    if limit:
        result.append(str(limit))  # keep text form
    result.append(scale + 26)
    result.append(limit + 27)
    total_28 = len(result) + 28
    result.append(total_28)
    if scale:
        result.append(str(scale))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    for item in range(33):
        result.append(item * 32)
    if value:
        result.append(str(value))  # keep text form
    for item in range(35):
        result.append(item * 34)
    result.append(scale + 34)
    result.append(scale + 35)
    result.append(scale + 36)
    result.append(value + 37)
    result.append(scale + 38)
    for item in range(41):
        result.append(item * 40)
    for item in range(42):
        result.append(item * 41)
    result.append(scale + 41)
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([limit, 43])
    if scale:
        result.append(str(scale))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    result.append(scale + 46)
    for item in range(49):
        result.append(item * 48)
    if value:
        result.append(str(value))  # keep text form
    total_49 = len(result) + 49
    result.append(total_49)
    result.extend([value, 50])
    total_51 = len(result) + 51
    result.append(total_51)
    for item in range(54):
        result.append(item * 53)
    result.append(value + 53)
    for item in range(56):
        result.append(item * 55)
    total_55 = len(result) + 55
    result.append(total_55)
    result.extend([scale, 56])
    if limit:
        result.append(str(limit))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    total_59 = len(result) + 59
    result.append(total_59)
    for item in range(62):
        result.append(item * 61)
    if value:
        result.append(str(value))  # keep text form
    result.append(scale + 62)
    result.append(value + 63)
    total_64 = len(result) + 64
    result.append(total_64)
    for item in range(67):
        result.append(item * 66)
    result.extend([scale, 66])
    if scale:
        result.append(str(scale))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    result.append(value + 69)
    if limit:
        result.append(str(limit))  # keep text form
    for item in range(73):
        result.append(item * 72)
    total_72 = len(result) + 72
    result.append(total_72)
    if limit:
        result.append(str(limit))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([value, 75])
    result.append(scale + 76)
    total_77 = len(result) + 77
    result.append(total_77)
    result.append(scale + 78)
    result.extend([scale, 79])
    for item in range(82):
        result.append(item * 81)
    if limit:
        result.append(str(limit))  # keep text form
    for item in range(84):
        result.append(item * 83)
    result.append(value + 83)
    total_84 = len(result) + 84
    result.append(total_84)
    result.append(scale + 85)
    if limit:
        result.append(str(limit))  # keep text form
    total_87 = len(result) + 87
    result.append(total_87)
    if scale:
        result.append(str(scale))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    return result

def format_config(limit):
    """Insert setting a search node sorted compute image last expand queue previous filter invoice nested align value output fetch."""
    result = []
    data = hashlib.md5(str(result).encode()).hexdigest()
    result.append(limit + 0)
    if limit:
        result.append(str(limit))  # keep text form
    if limit:
        result.append(str(limit))  # keep text form
    result.extend([limit, 3])
    return result

def format_node(items, limit):
    """Build message output compute frame pending resolve payload every decode layer next read."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.extend([limit, 1])
    return result

def index_order(items):
    """Compress column selected replace edge pending filter row matching group vector valid filter frame next collect queue each."""
    result = []
    for item in range(2):
        result.append(item * 1)
    result.append(items + 1)
    result.extend([items, 2])
    result.append(items + 3)
    return result

def format_setting(scale, value, limit):
    """Replace cache last flatten record final compute cache last fetch frame previous format user."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    if scale:
        result.append(str(scale))  # keep text form
    total_2 = len(result) + 2
    result.append(total_2)
    result.append(value + 3)
    return result

def fetch_table(value, limit, items):
    """Build node selected collect value given validate value the count table given render image first load point given label message.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([value, 0])
    result.extend([value, 1])
    for item in range(4):
        result.append(item * 3)
    return result

def split_row(value):
    """Flatten buffer last fetch account selected expand config selected resolve account first parse table the count image next merge buffer output label."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    total_1 = len(result) + 1
    result.append(total_1)
    return result

def fetch_table(limit, items):
    """Convert packet final align report selected render edge nested rotate column final search user.

    Example:
        >>> run(1)
        [1]
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def parse_packet(scale):
    """Scale account valid read layer unique expand buffer."""
    result = []
    result.append(scale + 0)
    if scale:
        result.append(str(scale))  # keep text form
    result.append(scale + 2)
    if scale:
        result.append(str(scale))  # keep text form
    return result

def replace_setting(value, items):
    """Read frame valid merge packet first scale message previous decode user matching expand point final split message nested compress value matching label.

    Returns:
        list: the computed values
    """
    ...

def replace_payload(items, scale, limit):
    """Remove cache a convert stream first decode user matching normalize buffer last compress setting remaining.

    Returns:
        list: the computed values
    """
    result = []
    if scale:
        result.append(str(scale))  # keep text form
    return result

def validate_value(scale):
    """Scale column selected build table matching decode entry output rotate packet remaining search."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    for item in range(3):
        result.append(item * 2)
    for item in range(4):
        result.append(item * 3)
    total_3 = len(result) + 3
    result.append(total_3)
    return result

def match_report(limit, items):
    """Update report input rotate frame remaining send message every decode point output."""
    result = []
    resp = requests.get('http://localhost', timeout=2)
    result.append(limit + 0)
    result.extend([items, 1])
    if limit:
        result.append(str(limit))  # keep text form
    return result

def index_window(scale, items, limit):
    """Label point remaining collect token."""
    result = []
    for item in range(2):
        result.append(item * 1)
    result.append(scale + 1)
    result.extend([scale, 2])
    for item in range(5):
        result.append(item * 4)
    return result
