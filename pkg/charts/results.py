import pandas as pd
from pyecharts import options as opts
from pyecharts.charts import Bar, Line


def draw_hierarchy_line(df: pd.DataFrame, n: int, k: int) -> Line:
    """d_r against r, with the Cartesian baseline when present and the n-k+r ceiling."""
    x_data = [str(r) for r in df["r"].tolist()]
    line = (
        Line()
        .add_xaxis(x_data)
        .add_yaxis("d_r", df["d_r"].tolist(), is_smooth=False)
        .set_global_opts(
            title_opts=opts.TitleOpts(title=f"[{n},{k}] 重量层级"),
            tooltip_opts=opts.TooltipOpts(trigger="axis"),
            xaxis_opts=opts.AxisOpts(name="r"),
            yaxis_opts=opts.AxisOpts(name="d_r", min_=0, max_=n),
        )
    )
    if "cartesian" in df.columns and df["cartesian"].notna().all():
        line.add_yaxis("cartesian", [int(v) for v in df["cartesian"].tolist()])
    line.add_yaxis("singleton", [n - k + int(r) for r in df["r"].tolist()], linestyle_opts=opts.LineStyleOpts(type_="dashed"))
    line.set_series_opts(label_opts=opts.LabelOpts(is_show=False))
    return line


def draw_quantum_bar(df: pd.DataFrame) -> Bar:
    x_data = [
        f"({l1},{l2})" + ("*" if impure else "")
        for l1, l2, impure in zip(df["lambda1"], df["lambda2"], df["impure"])
    ]
    bar = (
        Bar()
        .add_xaxis(x_data)
        .set_global_opts(
            tooltip_opts=opts.TooltipOpts(trigger="axis"),
            legend_opts=opts.LegendOpts(selected_mode="single"),
        )
    )
    for col in ("delta_z", "delta_x"):
        bar.add_yaxis(col, df[col].tolist())
    bar.set_series_opts(
        label_opts=opts.LabelOpts(is_show=False),
        markpoint_opts=opts.MarkPointOpts(
            data=[
                opts.MarkPointItem(type_="max", name="最大值"),
                opts.MarkPointItem(type_="min", name="最小值"),
            ]
        ),
    )
    return bar
