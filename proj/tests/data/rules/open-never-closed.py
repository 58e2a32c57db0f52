# --- positive
def first_line(path):
    fh = open(path, encoding="utf-8")
    return fh.readline()
# --- positive
def dump(path, text):
    out = open(path, "w", encoding="utf-8")
    out.write(text)
# --- positive
def count(path):
    f = open(path, "rb")
    n = len(f.read())
    return n
# --- negative
def first_line(path):
    fh = open(path, encoding="utf-8")
    line = fh.readline()
    fh.close()
    return line
# --- negative
def opener(path):
    fh = open(path, encoding="utf-8")
    return fh
# --- negative
def read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()
