'''
Export.py

Turns reports into the text that goes to stdout (and optionally a file).
Reports are attrs classes, cattrs unstructures them into plain dicts and
json/csv take it from there. Keys are sorted so the same report always
gives the same bytes.
'''

import csv
import enum
import io
import json
import pathlib
import sys
from typing import Any, Iterable, List, Optional, Sequence

import cattrs



SWEEP_FIELDS = ['B', 'strategy', 'Tu_max', 'Tq_max', 'correct']


converter = cattrs.Converter()
converter.register_unstructure_hook(enum.Enum, lambda e: e.value)



# =====================================================================================
#                                   Formatting
# =====================================================================================


def unstructure (report: Any) -> Any:
    return converter.unstructure(report)


def reportToJSON (report: Any) -> str:
    '''
    A report (or a list of them) as JSON with sorted keys and 2-space indent.
    '''
    return json.dumps(unstructure(report), sort_keys=True, indent=2)


def rowsToCSV (rows: Iterable[Any], fields: Sequence[str]) -> str:
    '''
    One CSV line per row in the given column order. Columns the rows do
    not have are left empty, nested values are dropped.
    '''
    buffer = io.StringIO()
    w = csv.DictWriter(buffer, list(fields), extrasaction='ignore', lineterminator='\n')
    w.writeheader()
    for row in rows:
        w.writerow(unstructure(row))
    return buffer.getvalue()


def scalarFields (report: Any) -> List[str]:
    '''Top-level fields of a report that fit in a CSV cell.'''
    data = unstructure(report)
    return [k for k, v in data.items() if not isinstance(v, (dict, list))]


def formatReport (report: Any, fmt: str, fields: Optional[Sequence[str]] = None) -> str:
    assert(fmt == 'json' or fmt == 'csv')
    if fmt == 'json':
        return reportToJSON(report)

    rows = report if isinstance(report, list) else [report]
    if fields is None:
        fields = scalarFields(rows[0]) if rows else []
    return rowsToCSV(rows, fields).rstrip('\n')



# =====================================================================================
#                                    Writing
# =====================================================================================


def writeReport (text: str, outfile: str):
    '''
    Writes the payload to outfile, creating parent folders as needed.
    '''
    path = pathlib.Path(outfile)
    if path.parent != pathlib.Path(''):
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', newline='') as f:
        f.write(text + '\n')



if __name__ == '__main__':
    print("This file is not meant to be run")
    sys.exit(1)
