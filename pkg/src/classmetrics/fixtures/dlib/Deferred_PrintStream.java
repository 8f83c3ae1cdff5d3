package dlib;

import java.io.*;

public class Deferred_PrintStream extends PrintStream
{
    private boolean buffering;
    private StringBuffer held;

    public Deferred_PrintStream (OutputStream sink)
    {
        super(sink);
        buffering = false;
        held = new StringBuffer();
    }

    public void buffer ()
    {
        buffering = true;
    }

    public void print (String text)
    {
        if (buffering)
        {
            held.append(text);
        }
        else
        {
            super.print(text);
        }
    }

    public void println (String text)
    {
        print(text);
        print("\n");
    }

    public void release ()
    {
        if (buffering)
        {
            super.print(held.toString());
            held.setLength(0);
            buffering = false;
        }
    }
}
