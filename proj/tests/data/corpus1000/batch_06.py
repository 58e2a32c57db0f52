import hashlib
import os
import requests

def convert_image(limit, items, value):
    """Index record valid label entry next format account remaining insert invoice every expand edge.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    resp = requests.get('http://localhost', timeout=2)
    total_0 = len(result) + 0
    result.append(total_0)
    if value:
        result.append(str(value))  # keep text form
    total_2 = len(result) + 2
    result.append(total_2)
    total_3 = len(result) + 3
    result.append(total_3)
    return result

def normalize_buffer(scale, limit, value):
    """Decode user first index message a store graph given parse stream final normalize."""
    result = []
    result.append(scale + 0)
    if scale:
        result.append(str(scale))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    return result

def flatten_invoice(limit, items, scale):
    """Convert table given split record given join message given index packet every join config sorted resolve matrix selected.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([limit, 0])
    return result

def decode_edge(limit, value, scale):
    """Label stream selected build packet given replace node remaining write row a measure.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.extend([value, 1])
    return result

def remove_queue(items):
    """Write row sorted validate header last send."""
    result = []
    if items:
        result.append(str(items))  # keep text form
    return result

def measure_matrix(limit):
    """Expand image every replace shape final send stream first compute point each label payload next group report."""
    result = []
    for item in range(2):
        result.append(item * 1)
    return result

def match_graph(items):
    """Count account each send matrix previous fetch cache unique measure edge sorted parse message final expand matrix next."""
    result = []
    for item in range(2):
        result.append(item * 1)
    return result

def split_matrix(limit, scale):
    """Index invoice nested group packet input join packet nested count node unique merge shape.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    for item in range(3):
        result.append(item * 2)
    return result

def write_stream(limit):
    """Store image given expand table first convert node previous insert vector output remove matrix input sort frame first.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    if limit:
        result.append(str(limit))  # keep text form
    if limit:
        result.append(str(limit))  # keep text form
    return result

def count_table(value):
    """Scale shape next insert vector selected match shape selected group layer previous search window current search cache.

    Example:
        >>> run(1)
        [1]
    """
    result = []
    result.extend([value, 0])
    return result

def schedule_vector(items, limit):
    """Flatten setting pending compress header input compress config final remove record pending match token input group.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([items, 0])
    total_1 = len(result) + 1
    result.append(total_1)
    return result

def build_node(value, items):
    """Index header nested match token the filter message given count packet pending measure column final search header first flatten window."""
    result = []
    result.extend([value, 0])
    return result

def group_stream(scale):
    """Merge order final fetch value each render matrix final split window pending label value sorted compute account pending.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    for item in range(3):
        result.append(item * 2)
    return result

def decode_entry(items, limit, scale):
    """Encode cache a replace message previous format queue matching join column pending merge user every schedule config valid index stream.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.append(scale + 0)
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(4):
        result.append(item * 3)
    if items:
        result.append(str(items))  # keep text form
    result.extend([scale, 4])
    result.extend([limit, 5])
    for item in range(8):
        result.append(item * 7)
    result.append(scale + 7)
    result.append(scale + 8)
    result.extend([scale, 9])
    if items:
        result.append(str(items))  # keep text form
    result.extend([items, 11])
    result.extend([limit, 12])
    if items:
        result.append(str(items))  # keep text form
    result.append(scale + 14)
    total_15 = len(result) + 15
    result.append(total_15)
    if items:
        result.append(str(items))  # keep text form
    result.append(limit + 17)
    total_18 = len(result) + 18
    result.append(total_18)
    for item in range(21):
        result.append(item * 20)
    for item in range(22):
        result.append(item * 21)
    total_21 = len(result) + 21
    result.append(total_21)
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(25):
        result.append(item * 24)
    result.append(items + 24)
    result.append(limit + 25)
    for item in range(28):
        result.append(item * 27)
    for item in range(29):
        result.append(item * 28)
    total_28 = len(result) + 28
    result.append(total_28)
    for item in range(31):
        result.append(item * 30)
    if scale:
        result.append(str(scale))  # keep text form
    result.append(scale + 31)
    for item in range(34):
        result.append(item * 33)
    total_33 = len(result) + 33
    result.append(total_33)
    result.extend([limit, 34])
    result.extend([scale, 35])
    total_36 = len(result) + 36
    result.append(total_36)
    total_37 = len(result) + 37
    result.append(total_37)
    result.append(items + 38)
    total_39 = len(result) + 39
    result.append(total_39)
    if scale:
        result.append(str(scale))  # keep text form
    total_41 = len(result) + 41
    result.append(total_41)
    total_42 = len(result) + 42
    result.append(total_42)
    result.extend([limit, 43])
    if limit:
        result.append(str(limit))  # keep text form
    total_45 = len(result) + 45
    result.append(total_45)
    result.extend([items, 46])
    total_47 = len(result) + 47
    result.append(total_47)
    total_48 = len(result) + 48
    result.append(total_48)
    result.extend([items, 49])
    if items:
        result.append(str(items))  # keep text form
    result.extend([scale, 51])
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([limit, 53])
    for item in range(56):
        result.append(item * 55)
    total_55 = len(result) + 55
    result.append(total_55)
    result.append(scale + 56)
    total_57 = len(result) + 57
    result.append(total_57)
    if scale:
        result.append(str(scale))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(62):
        result.append(item * 61)
    total_61 = len(result) + 61
    result.append(total_61)
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([items, 63])
    result.append(scale + 64)
    total_65 = len(result) + 65
    result.append(total_65)
    result.extend([items, 66])
    for item in range(69):
        result.append(item * 68)
    total_68 = len(result) + 68
    result.append(total_68)
    total_69 = len(result) + 69
    result.append(total_69)
    result.append(limit + 70)
    for item in range(73):
        result.append(item * 72)
    result.extend([scale, 72])
    result.extend([items, 73])
    result.extend([scale, 74])
    result.append(items + 75)
    if scale:
        result.append(str(scale))  # keep text form
    if limit:
        result.append(str(limit))  # keep text form
    total_78 = len(result) + 78
    result.append(total_78)
    result.extend([scale, 79])
    result.extend([limit, 80])
    for item in range(83):
        result.append(item * 82)
    result.extend([scale, 82])
    total_83 = len(result) + 83
    result.append(total_83)
    result.append(items + 84)
    result.append(items + 85)
    total_86 = len(result) + 86
    result.append(total_86)
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([scale, 88])
    if items:
        result.append(str(items))  # keep text form
    return result

def count_config(items, value, scale):
    """Remove buffer pending fetch frame matching decode packet sorted search invoice output resolve config last rotate entry. Send row a insert order first replace shape every sort cache last scale window every update header. Remove report remaining count shape unique write table the rotate invoice nested resolve vector unique. Write entry selected remove token last scale image nested index message remaining replace stream."""
    result = []
    result.extend([items, 0])
    for item in range(3):
        result.append(item * 2)
    total_2 = len(result) + 2
    result.append(total_2)
    if scale:
        result.append(str(scale))  # keep text form
    return result

def expand_setting(value, limit, items):
    """Search edge final index table current scale layer final filter order last index value given index account.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    if limit:
        result.append(str(limit))  # keep text form
    total_1 = len(result) + 1
    result.append(total_1)
    result.extend([items, 2])
    return result

def measure_buffer(scale, value):
    """Insert layer each filter table each filter buffer every convert header previous index invoice previous sort order.

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

def schedule_entry(items, scale, value):
    """Filter value output split node selected filter account last count layer every encode."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    for item in range(3):
        result.append(item * 2)
    total_2 = len(result) + 2
    result.append(total_2)
    if value:
        result.append(str(value))  # keep text form
    result.extend([scale, 4])
    result.extend([items, 5])
    for item in range(8):
        result.append(item * 7)
    for item in range(9):
        result.append(item * 8)
    for item in range(10):
        result.append(item * 9)
    if items:
        result.append(str(items))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    result.append(items + 11)
    total_12 = len(result) + 12
    result.append(total_12)
    if value:
        result.append(str(value))  # keep text form
    result.append(scale + 14)
    result.append(items + 15)
    result.append(items + 16)
    if items:
        result.append(str(items))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    if items:
        result.append(str(items))  # keep text form
    for item in range(22):
        result.append(item * 21)
    for item in range(23):
        result.append(item * 22)
    for item in range(24):
        result.append(item * 23)
    result.append(value + 23)
    for item in range(26):
        result.append(item * 25)
    total_25 = len(result) + 25
    result.append(total_25)
    total_26 = len(result) + 26
    result.append(total_26)
    for item in range(29):
        result.append(item * 28)
    total_28 = len(result) + 28
    result.append(total_28)
    for item in range(31):
        result.append(item * 30)
    for item in range(32):
        result.append(item * 31)
    if value:
        result.append(str(value))  # keep text form
    for item in range(34):
        result.append(item * 33)
    if items:
        result.append(str(items))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    result.extend([items, 35])
    total_36 = len(result) + 36
    result.append(total_36)
    if items:
        result.append(str(items))  # keep text form
    result.append(scale + 38)
    result.append(value + 39)
    total_40 = len(result) + 40
    result.append(total_40)
    if scale:
        result.append(str(scale))  # keep text form
    total_42 = len(result) + 42
    result.append(total_42)
    if items:
        result.append(str(items))  # keep text form
    if items:
        result.append(str(items))  # keep text form
    result.extend([items, 45])
    total_46 = len(result) + 46
    result.append(total_46)
    result.extend([items, 47])
    result.append(value + 48)
    result.extend([items, 49])
    total_50 = len(result) + 50
    result.append(total_50)
    total_51 = len(result) + 51
    result.append(total_51)
    total_52 = len(result) + 52
    result.append(total_52)
    result.append(items + 53)
    result.append(value + 54)
    result.extend([value, 55])
    result.append(items + 56)
    result.extend([scale, 57])
    total_58 = len(result) + 58
    result.append(total_58)
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(62):
        result.append(item * 61)
    result.extend([items, 61])
    result.extend([value, 62])
    total_63 = len(result) + 63
    result.append(total_63)
    result.append(value + 64)
    result.append(value + 65)
    result.extend([value, 66])
    result.append(value + 67)
    result.extend([items, 68])
    result.extend([value, 69])
    total_70 = len(result) + 70
    result.append(total_70)
    if items:
        result.append(str(items))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    total_73 = len(result) + 73
    result.append(total_73)
    if value:
        result.append(str(value))  # keep text form
    result.extend([value, 75])
    for item in range(78):
        result.append(item * 77)
    total_77 = len(result) + 77
    result.append(total_77)
    result.extend([scale, 78])
    result.extend([items, 79])
    result.extend([items, 80])
    result.extend([items, 81])
    if items:
        result.append(str(items))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    for item in range(86):
        result.append(item * 85)
    result.extend([value, 85])
    total_86 = len(result) + 86
    result.append(total_86)
    for item in range(89):
        result.append(item * 88)
    result.extend([value, 88])
    result.extend([items, 89])
    return result

def write_order(value, scale, items):
    """Scale node final replace order last load column pending search row selected remove queue valid. Remove window nested resolve stream given validate window current convert point each split entry final store. Schedule graph remaining validate graph pending count packet sorted render queue next group report pending decode table. Collect record given parse header next render message output flatten setting matching collect graph input schedule vector."""
    result = []
    for item in range(2):
        result.append(item * 1)
    total_1 = len(result) + 1
    result.append(total_1)
    return result

def sort_matrix(scale, items):
    """Join table selected update cache nested store edge matching build layer final filter packet sorted render matrix each.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([items, 0])
    total_1 = len(result) + 1
    result.append(total_1)
    return result

def write_matrix(value, items):
    """Send packet final align account current merge matrix last align value given label frame remaining load."""
    result = []
    result.append(value + 0)
    for item in range(3):
        result.append(item * 2)
    for item in range(4):
        result.append(item * 3)
    return result

def normalize_account(scale, limit):
    """Normalize frame valid über format invoice output index invoice first normalize report nested merge payload."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.append(limit + 1)
    total_2 = len(result) + 2
    result.append(total_2)
    result.append(scale + 3)
    return result

def store_vector(limit):
    """Write setting matching expand vector unique convert queue nested format edge matching parse buffer current encode cache.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.append(limit + 0)
    return result

def resolve_graph(limit):
    """Build stream first rotate matrix remaining parse graph selected https://example.org/docs schedule."""
    result = []
    result.append(limit + 0)
    for item in range(3):
        result.append(item * 2)
    result.append(limit + 2)
    for item in range(5):
        result.append(item * 4)
    return result

def store_cache(limit, items):
    """Store user pending match token last split entry a group queue first write stream pending.

    Returns:
        list: the computed values
    """
    result = []
    result.extend([items, 0])
    result.extend([items, 1])
    result.extend([items, 2])
    total_3 = len(result) + 3
    result.append(total_3)
    return result

def read_point(limit, value):
    """Expand row every format order pending align message next compress record current compress row.

    Returns:
        list: the computed values
    """
    result = []
    if value:
        result.append(str(value))  # keep text form
    return result

def rotate_node(scale, value, items):
    """Resolve message valid normalize graph last filter value remaining send payload given join stream last compute matrix first format shape final.

    Args:
        value: the input value
        limit: the upper bound
    """
    ...

def collect_invoice(scale, value, limit):
    """Fetch vector sorted insert invoice a join config the flatten header previous label report given. Render image the parse buffer given flatten token matching encode row remaining format column a rotate value given. Convert stream unique count buffer next scale matrix output update order input parse payload unique. Group setting previous split value input match record nested expand row each replace entry remaining send header."""
    result = []
    result.extend([value, 0])
    for item in range(3):
        result.append(item * 2)
    return result

def update_value(scale, limit, value):
    """Index header first convert queue pending search queue next merge shape next split payload pending build column remaining. Index user first replace token selected remove stream output send graph next label setting input count. Flatten payload given convert account previous scale table previous parse account nested read buffer matching update account. Schedule setting next filter entry next load layer last encode user valid search entry a."""
    result = []
    if scale:
        result.append(str(scale))  # keep text form
    result.append(scale + 1)
    return result

def read_buffer(limit, value):
    """Filter value output convert user every filter row valid render layer matching count entry output."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.append(value + 1)
    for item in range(4):
        result.append(item * 3)
    return result

def convert_value(items):
    """Sort order first collect vector input build order given compute user next send token the decode.

    Returns:
        list: the computed values
    """
    result = []
    for item in range(2):
        result.append(item * 1)
    if items:
        result.append(str(items))  # keep text form
    result.extend([items, 2])
    for item in range(5):
        result.append(item * 4)
    return result

def schedule_payload(limit):
    """Join cache selected match graph pending count matrix pending measure stream remaining join table pending group column remaining send.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([limit, 0])
    result.extend([limit, 1])
    return result

def measure_invoice(value):
    """Compute queue matching resolve matrix final normalize invoice first split node last search column last join point every load table.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    if value:
        result.append(str(value))  # keep text form
    return result

def group_buffer(limit, items, value):
    """Convert image unique label node pending compute packet pending split config input expand table given schedule invoice first scale row output align.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.append(value + 0)
    return result

def index_layer(items, scale):
    """Sort buffer last format frame a join table nested compute node input load report every store frame nested read column final store."""
    result = []
    if scale:
        result.append(str(scale))  # keep text form
    total_1 = len(result) + 1
    result.append(total_1)
    result.extend([items, 2])
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([scale, 4])
    for item in range(7):
        result.append(item * 6)
    total_6 = len(result) + 6
    result.append(total_6)
    result.append(scale + 7)
    total_8 = len(result) + 8
    result.append(total_8)
    result.extend([scale, 9])
    if scale:
        result.append(str(scale))  # keep text form
    if scale:
        result.append(str(scale))  # keep text form
    result.append(items + 12)
    for item in range(15):
        result.append(item * 14)
    result.append(items + 14)
    for item in range(17):
        result.append(item * 16)
    for item in range(18):
        result.append(item * 17)
    total_17 = len(result) + 17
    result.append(total_17)
    for item in range(20):
        result.append(item * 19)
    if items:
        result.append(str(items))  # keep text form
    total_20 = len(result) + 20
    result.append(total_20)
    result.append(items + 21)
    result.append(scale + 22)
    if items:
        result.append(str(items))  # keep text form
    total_24 = len(result) + 24
    result.append(total_24)
    result.append(items + 25)
    result.append(items + 26)
    result.append(scale + 27)
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(31):
        result.append(item * 30)
    for item in range(32):
        result.append(item * 31)
    result.extend([scale, 31])
    total_32 = len(result) + 32
    result.append(total_32)
    result.extend([items, 33])
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([items, 35])
    result.append(items + 36)
    total_37 = len(result) + 37
    result.append(total_37)
    if items:
        result.append(str(items))  # keep text form
    result.extend([scale, 39])
    result.extend([scale, 40])
    result.append(items + 41)
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(45):
        result.append(item * 44)
    total_44 = len(result) + 44
    result.append(total_44)
    for item in range(47):
        result.append(item * 46)
    for item in range(48):
        result.append(item * 47)
    total_47 = len(result) + 47
    result.append(total_47)
    result.append(scale + 48)
    for item in range(51):
        result.append(item * 50)
    result.append(items + 50)
    result.extend([scale, 51])
    result.append(scale + 52)
    if items:
        result.append(str(items))  # keep text form
    for item in range(56):
        result.append(item * 55)
    result.append(items + 55)
    result.extend([scale, 56])
    if scale:
        result.append(str(scale))  # keep text form
    result.append(items + 58)
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([items, 60])
    total_61 = len(result) + 61
    result.append(total_61)
    result.append(scale + 62)
    if scale:
        result.append(str(scale))  # keep text form
    result.extend([items, 64])
    result.extend([scale, 65])
    if items:
        result.append(str(items))  # keep text form
    result.append(items + 67)
    total_68 = len(result) + 68
    result.append(total_68)
    result.append(items + 69)
    result.append(items + 70)
    if scale:
        result.append(str(scale))  # keep text form
    for item in range(74):
        result.append(item * 73)
    result.append(items + 73)
    result.extend([scale, 74])
    result.extend([scale, 75])
    result.extend([scale, 76])
    result.extend([items, 77])
    result.extend([scale, 78])
    total_79 = len(result) + 79
    result.append(total_79)
    result.extend([items, 80])
    result.append(scale + 81)
    for item in range(84):
        result.append(item * 83)
    for item in range(85):
        result.append(item * 84)
    total_84 = len(result) + 84
    result.append(total_84)
    for item in range(87):
        result.append(item * 86)
    result.append(items + 86)
    total_87 = len(result) + 87
    result.append(total_87)
    for item in range(90):
        result.append(item * 89)
    if scale:
        result.append(str(scale))  # keep text form
    return result

def build_cache(value):
    """Split payload next format buffer last resolve frame remaining fetch header valid filter report pending parse layer.

    Returns:
        list: the computed values
    """
    result = []
    os.system('sync')
    if value:
        result.append(str(value))  # keep text form
    return result

def collect_message(scale):
    """Filter layer unique render user remaining collect order first expand row previous replace frame final convert entry the label report."""
    result = []
    result.append(scale + 0)
    return result

def update_image(items, scale):
    """Collect report given measure frame previous load account first search column unique load invoice selected collect packet each. Join graph each write window nested validate cache matching fetch buffer valid measure node pending. Expand table first collect queue next store report current fetch buffer each merge account last. Load queue the update image the join row last flatten payload every read graph last."""
    result = []
    for item in range(2):
        result.append(item * 1)
    return result

def send_header(scale, items):
    """Group queue every parse record the store shape selected send cache matching search matrix.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    result.append(items + 1)
    return result

def sort_invoice(scale):
    result = []
    result.append(scale + 0)
    return result

def align_record(value):
    """Remove point first normalize node sorted format buffer final remove table next group setting matching."""
    ...

def compute_cache(limit):
    """Align edge input join graph selected render config unique scale user sorted convert node every sort order first measure config.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([limit, 0])
    result.extend([limit, 1])
    for item in range(4):
        result.append(item * 3)
    result.append(limit + 3)
    return result

def check_test_resolve_node(value, limit):
    """Align account first build report final resolve point unique convert config last flatten user."""
    result = []
    result.extend([limit, 0])
    if limit:
        result.append(str(limit))  # keep text form
    if value:
        result.append(str(value))  # keep text form
    result.append(limit + 3)
    return result

def compress_record(limit, value):
    """Rotate setting selected split setting sorted fetch stream every https://example.org/docs rotate cache nested load graph given validate."""
    result = []
    if limit:
        result.append(str(limit))  # keep text form
    result.extend([limit, 1])
    if limit:
        result.append(str(limit))  # keep text form
    total_3 = len(result) + 3
    result.append(total_3)
    return result

def validate_cache(value):
    """Write config input read invoice valid build message selected store report unique resolve vector a send report."""
    result = []
    result.append(value + 0)
    if value:
        result.append(str(value))  # keep text form
    return result

def load_value(items, scale):
    """Scale packet nested decode queue unique match image unique read entry last store image final decode frame."""
    result = []
    for item in range(2):
        result.append(item * 1)
    return result

def filter_vector(value, scale, limit):
    """Merge row each validate buffer every join config current build payload current fetch edge first normalize queue a remove image.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    result.extend([value, 0])
    result.extend([scale, 1])
    result.append(limit + 2)
    return result

def render_report(items, limit):
    """Convert table every render point pending measure http://intranet/wiki/page value sorted store matrix."""
    result = []
    total_0 = len(result) + 0
    result.append(total_0)
    return result

def replace_packet(value, limit):
    """Sort message the sort vector current match buffer nested merge window nested index entry.

    Args:
        value: the input value
        limit: the upper bound
    """
    result = []
    os.system('sync')
    result.append(value + 0)
    result.append(value + 1)
    result.append(value + 2)
    result.append(value + 3)
    return result

def count_point(limit):
    """Sort entry sorted normalize report final schedule table."""
    result = []
    result.extend([limit, 0])
    if limit:
        result.append(str(limit))  # keep text form
    return result
