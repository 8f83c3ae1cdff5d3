package dlib;

import java.io.*;

public class Deferred_PrintWriter extends PrintWriter
{
    private String[] lines;
    private int held;

    public Deferred_PrintWriter (Writer sink)
    {
        super(sink);
        lines = new String[16];
        held = 0;
    }

    public void defer (String line)
    {
        if (held == lines.length)
        {
            String[] bigger = new String[held * 2];
            System.arraycopy(lines, 0, bigger, 0, held);
            lines = bigger;
        }
        lines[held] = line;
        held = held + 1;
    }

    public void replay ()
    {
        for (int i = 0; i < held; i = i + 1)
        {
            println(lines[i]);
        }
        held = 0;
    }

    public int pending ()
    {
        return( held );
    }
}
