from .report import ProjectReport, build_report, count_instances
from .render import FORMATS, dumps_json, render, report_to_dict, write_csv
